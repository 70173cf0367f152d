"""Command-line front end: run a JSON scenario and print a report.

Scenario document::

    {
      "ring": "builtin:ex61",            # or {"quiver": {...}, "group": ...}
                                         # or {"partial_action": {...}}
      "quotient": 2,                     # modulus for Z, member list for finite G
      "checks": ["classify"],            # or any names from CHECKS
      "bound": 8,
      "output": "text",                  # or "structured"
      "expect": {"induced.epsilon_strong": "Fails"}
    }

Exit codes: 0 all fine, 1 input error, 2 an expectation was not met.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis as an
from .groups import GroupError, construct_group, normal_subgroup
from .leavitt import LpaGrading, Quiver, StandardGrading, builtin_quiver, quiver_from_json
from .partial_skew import BUILTINS as SKEW_BUILTINS
from .partial_skew import SkewGrading, UnknownBuiltin, action_from_json, axiom_check, builtin

CHECKS = (
    "classify",
    "strong",
    "symmetric",
    "epsilon_strong",
    "nearly",
    "essentially",
    "virtually",
    "epsilon_finite",
    "epsilon_crossed",
    "main1",
    "axioms",
)

LPA_BUILTINS = {
    "fig2": "v1 -> v2, one edge into a sink",
    "loop": "one vertex with one loop (Laurent polynomials)",
    "discrete_inf": "infinitely many isolated vertices, seen through truncations",
}


class ParseError(ValueError):
    pass


class UnknownCheck(ValueError):
    pass


@dataclass
class Scenario:
    ring: object
    quotient: object = None
    checks: list[str] = field(default_factory=lambda: ["classify"])
    bound: int = 4
    output: str = "text"
    expect: dict[str, str] = field(default_factory=dict)
    base: Path = Path(".")


def parse_scenario(text: str, base: Path = Path(".")) -> Scenario:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict) or "ring" not in obj:
        raise ParseError("scenario must be an object with a 'ring' entry")
    checks = obj.get("checks", ["classify"])
    if isinstance(checks, str):
        checks = [checks]
    for c in checks:
        if c not in CHECKS:
            raise UnknownCheck(c)
    bound = obj.get("bound", 4)
    if not isinstance(bound, int) or bound < 0:
        raise ParseError("bound must be a non-negative integer")
    output = obj.get("output", "text")
    if output not in ("text", "structured"):
        raise ParseError(f"unknown output format {output!r}")
    expect = obj.get("expect", {})
    for k, v in expect.items():
        if v not in an.STATUSES:
            raise ParseError(f"expectation {k!r} has unknown status {v!r}")
    return Scenario(obj["ring"], obj.get("quotient"), list(checks), bound, output, dict(expect), base)


def load_ring(desc, base: Path = Path(".")):
    """Resolve a ring description to an engine adapter."""
    if isinstance(desc, str):
        name = desc.removeprefix("builtin:")
        if name in LPA_BUILTINS:
            return builtin_quiver(name)
        if name in SKEW_BUILTINS:
            return SkewGrading(builtin(name))
        raise UnknownBuiltin(name)
    if not isinstance(desc, dict):
        raise ParseError("ring must be a string or an object")
    if "builtin" in desc:
        return load_ring(desc["builtin"], base)
    if "quiver" in desc or "quiver_file" in desc:
        qobj = desc.get("quiver")
        if qobj is None:
            qobj = json.loads((base / desc["quiver_file"]).read_text())
        q, degrees = quiver_from_json(qobj)
        group = construct_group(desc.get("group", qobj.get("group", "integers")))
        return LpaGrading(q, StandardGrading(q, group, degrees))
    if "partial_action" in desc:
        return SkewGrading(action_from_json(desc["partial_action"]))
    raise ParseError("ring object needs 'builtin', 'quiver', 'quiver_file' or 'partial_action'")


@dataclass
class RunResult:
    ring: str
    bound: int
    sections: dict[str, dict[str, an.Verdict]]
    mismatches: list[str] = field(default_factory=list)
    notes: dict[str, list[str]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "bound": self.bound,
            "sections": {s: {k: v.to_dict() for k, v in vs.items()} for s, vs in self.sections.items()},
            "mismatches": list(self.mismatches),
            "notes": {k: list(v) for k, v in self.notes.items()},
        }


def result_from_dict(d: dict) -> RunResult:
    secs = {s: {k: an.Verdict.from_dict(v) for k, v in vs.items()} for s, vs in d["sections"].items()}
    return RunResult(d["ring"], d["bound"], secs, list(d.get("mismatches", [])), {k: list(v) for k, v in d.get("notes", {}).items()})


def _single(check: str, ind: an.InducedGrading, bound: int) -> tuple[an.Verdict, list[str]]:
    notes: list[str] = []
    if check == "strong":
        return an.check_strong(ind, bound), notes
    if check == "symmetric":
        return an.check_symmetric(ind, bound), notes
    if check == "epsilon_strong":
        v, ws = an.check_epsilon_strong(ind, bound)
        notes += [f"eps_{w.coset} = {ind.render(w.chi)} [{w.status}] {w.note}".rstrip() for w in ws]
        return v, notes
    if check == "nearly":
        return an.check_nearly(ind, bound), notes
    if check == "essentially":
        return an.check_essentially(ind, bound), notes
    if check == "virtually":
        return an.check_virtually(ind, bound), notes
    if check == "epsilon_finite":
        return an.check_epsilon_finite(ind, bound), notes
    if check == "epsilon_crossed":
        v = an.check_epsilon_crossed(ind, bound)
        for c, w in v.elements.get("witnesses", {}).items():
            if w is not None:
                notes.append(f"{c}: s = {ind.render(w[0])}, t = {ind.render(w[1])}")
        return v, notes
    if check == "main1":
        rows = an.theorem_main1_condition(ind, bound)
        ok, table = an.main1_agrees(ind, bound)
        per = {str(r.coset): r.status for r in rows}
        notes += [f"{r.coset}: {r.status}; chi = {ind.render(r.chi) if r.chi is not None else '-'}; {r.note}" for r in rows]
        v = an.Verdict(
            "main1", an._combine(per.values()), bound, per_coset=per,
            certificate="agrees with epsilon_strong" if ok else None,
            witness=None if ok else f"disagreement with epsilon_strong: {table}",
        )
        return v, notes
    if check == "axioms":
        action = getattr(ind.parent, "action", None)
        if action is None:
            return an.Verdict("axioms", an.HOLDS, bound, certificate="Leavitt path algebra: no partial action"), notes
        r = axiom_check(action, bound)
        wit = f"condition ({r.condition}) at {r.witness}: {r.detail}" if r.status == an.FAILS else None
        return an.Verdict("axioms", r.status, bound, witness=wit), notes
    raise UnknownCheck(check)


def run_scenario(sc: Scenario) -> RunResult:
    ring = load_ring(sc.ring, sc.base)
    sub = None
    if sc.quotient is not None:
        sub = normal_subgroup(ring.group, sc.quotient)
    result = RunResult(ring.name, sc.bound, {})
    if "classify" in sc.checks:
        rep = an.classify(ring, sub, sc.bound)
        result.sections["parent"] = rep.parent.verdicts
        result.notes["parent"] = [f"defect: {d}" for d in rep.parent.defects]
        if rep.induced is not None:
            result.sections["induced"] = rep.induced.verdicts
            result.notes["induced"] = [f"defect: {d}" for d in rep.induced.defects]
    target = "induced" if sub is not None and not sub.is_trivial else "parent"
    ind = an.InducedGrading(ring, sub)
    for check in sc.checks:
        if check == "classify":
            continue
        v, notes = _single(check, ind, sc.bound)
        result.sections.setdefault(target, {})[check] = v
        result.notes.setdefault(target, []).extend(notes)
    for key, want in sorted(sc.expect.items()):
        sec, _, check = key.rpartition(".")
        sec = sec or target
        got = result.sections.get(sec, {}).get(check)
        if got is None:
            result.mismatches.append(f"{key}: expected {want}, not computed")
        elif got.status != want:
            result.mismatches.append(f"{key}: expected {want}, got {got.status}")
    return result


def render_text(res: RunResult) -> str:
    lines = [f"ring: {res.ring}", f"bound: {res.bound}"]
    for sec in sorted(res.sections, key=lambda s: s != "parent"):
        lines.append("")
        lines.append(f"[{sec}]")
        for name, v in res.sections[sec].items():
            anchor = an.ANCHORS.get(name, "")
            lines.append(f"  {name:<16} {v.status:<10} ({anchor})" if anchor else f"  {name:<16} {v.status}")
            if v.witness:
                lines.append(f"      witness: {v.witness}")
            if v.certificate:
                lines.append(f"      certificate: {v.certificate}")
            for c, st in v.per_coset.items():
                lines.append(f"      coset {c}: {st}")
        for n in res.notes.get(sec, []):
            lines.append(f"  - {n}")
    lines.append("")
    if res.mismatches:
        lines += [f"MISMATCH {m}" for m in res.mismatches]
    else:
        lines.append("expectations: all met")
    return "\n".join(lines) + "\n"


def render_structured(res: RunResult) -> str:
    return json.dumps(res.to_dict(), indent=2, sort_keys=True) + "\n"


def list_builtins() -> str:
    rows = [f"builtin:{k:<16} leavitt        {v}" for k, v in LPA_BUILTINS.items()]
    rows += [f"builtin:{k:<16} partial-skew   {v[1]}" for k, v in SKEW_BUILTINS.items()]
    return "\n".join(rows) + "\n"


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="grada", description="Classify group gradings of Leavitt path algebras and partial skew group rings.")
    ap.add_argument("--scenario", help="path to a JSON scenario")
    ap.add_argument("--ring", help="ring shortcut, e.g. builtin:fig2 (instead of a scenario)")
    ap.add_argument("--quotient", help="normal subgroup: modulus for Z or comma-separated members")
    ap.add_argument("--checks", help="comma-separated check names (default classify)")
    ap.add_argument("--bound", type=int, help="override the scenario bound")
    ap.add_argument("--format", choices=("text", "structured"), help="report format")
    ap.add_argument("--list-builtins", action="store_true")
    args = ap.parse_args(argv)

    if args.list_builtins:
        sys.stdout.write(list_builtins())
        return 0
    try:
        if args.scenario:
            path = Path(args.scenario)
            sc = parse_scenario(path.read_text(), path.parent)
        elif args.ring:
            q = None
            if args.quotient:
                q = [int(x) for x in args.quotient.split(",")]
                q = q[0] if len(q) == 1 else q
            checks = args.checks.split(",") if args.checks else ["classify"]
            sc = parse_scenario(json.dumps({"ring": args.ring, "quotient": q, "checks": checks}))
        else:
            ap.error("need --scenario, --ring or --list-builtins")
        if args.bound is not None:
            if args.bound < 0:
                raise ParseError("bound must be non-negative")
            sc.bound = args.bound
        if args.format:
            sc.output = args.format
        res = run_scenario(sc)
    except (ParseError, UnknownCheck, UnknownBuiltin, GroupError, OSError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    out = render_text(res) if sc.output == "text" else render_structured(res)
    sys.stdout.write(out)
    return 2 if res.mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
