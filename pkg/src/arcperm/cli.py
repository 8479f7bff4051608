"""Command-line front end: enumeration, statistics, membership diagnosis,
canonical decomposition, distribution tables, and formula verification.

Exit codes: 0 on success (and when every verified row is EQUAL or outside
its stated range), 1 when verification finds a MISMATCH, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canonical, formulas
from .arcsets import (
    HYPEROCTAHEDRAL_LIMIT,
    SYMMETRIC_LIMIT,
    arc_violation,
    b_arc_violation,
    generate_arc,
    generate_b_arc,
    generate_hyperoctahedral,
    generate_left_unimodal,
    generate_signed_arc,
    generate_symmetric,
    left_unimodal_violation,
    signed_arc_violation,
)
from .patterns import arc_forbidden, b_arc_forbidden, find_occurrence, signed_arc_forbidden
from .perms import Permutation, SignedPermutation

ARC_FAMILY_LIMIT = 12

_SIGNED_SETS = {"signed-arc", "b-arc", "hyp"}
_GENERATORS = {
    "arc": generate_arc,
    "left-unimodal": generate_left_unimodal,
    "signed-arc": generate_signed_arc,
    "b-arc": generate_b_arc,
    "sym": generate_symmetric,
    "hyp": generate_hyperoctahedral,
}
_VIOLATIONS = {
    "arc": arc_violation,
    "left-unimodal": left_unimodal_violation,
    "signed-arc": signed_arc_violation,
    "b-arc": b_arc_violation,
}
_FORBIDDEN = {
    "arc": arc_forbidden,
    "signed-arc": signed_arc_forbidden,
    "b-arc": b_arc_forbidden,
}


class UsageError(ValueError):
    pass


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _generate(set_name: str, n: int, force: bool):
    if n < 1:
        raise UsageError("n must be positive")
    limit = {"sym": SYMMETRIC_LIMIT, "hyp": HYPEROCTAHEDRAL_LIMIT}.get(
        set_name, ARC_FAMILY_LIMIT
    )
    if n > limit:
        if not force:
            raise UsageError(
                f"n={n} exceeds the guard {limit} for set {set_name!r} (use --force)"
            )
        print(f"warning: n={n} exceeds the guard {limit}", file=sys.stderr)
        limit = n
    if set_name in ("sym", "hyp"):
        return _GENERATORS[set_name](n, limit=limit)
    return _GENERATORS[set_name](n)


def _parse_for_set(text: str, set_name: str):
    if set_name in _SIGNED_SETS:
        return SignedPermutation.parse(text)
    return Permutation.parse(text)


def cmd_enumerate(args) -> int:
    items = _generate(args.set, args.n, args.force)
    if args.format == "json":
        payload = {
            "set": args.set,
            "n": args.n,
            "items": [str(p) for p in items],
            "count": len(items),
        }
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        lines = ["index,permutation"]
        lines += [f"{i},\"{p}\"" for i, p in enumerate(items, 1)]
        lines.append(f"count,{len(items)}")
        _emit("\n".join(lines), args.out)
    else:
        lines = [str(p) for p in items]
        lines.append(f"count {len(items)}")
        _emit("\n".join(lines), args.out)
    return 0


def cmd_stats(args) -> int:
    if args.group == "A":
        p = Permutation.parse(args.perm)
        data = {
            "des_set": sorted(p.descent_set()),
            "des": p.des(),
            "maj": p.maj(),
            "inv": p.inv(),
            "sign": p.sign(),
        }
    else:
        p = SignedPermutation.parse(args.perm)
        data = p.stats().as_dict()
    if args.format == "json":
        payload = {"perm": str(p), "group": args.group, **data}
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        lines = ["stat,value"] + [f"{k},\"{v}\"" if isinstance(v, list) else f"{k},{v}"
                                  for k, v in data.items()]
        _emit("\n".join(lines), args.out)
    else:
        lines = [f"perm {p}", f"group {args.group}"]
        lines += [f"{k} {v}" for k, v in data.items()]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_check(args) -> int:
    p = _parse_for_set(args.perm, args.set)
    violation = _VIOLATIONS[args.set](p)
    witness = None
    if violation is not None and args.set in _FORBIDDEN:
        occ = find_occurrence(p, _FORBIDDEN[args.set]())
        if occ is not None:
            witness = {
                "pattern": str(occ.pattern),
                "positions": list(occ.positions),
                "values": list(occ.values),
            }
    if args.format == "json":
        payload = {
            "perm": str(p),
            "set": args.set,
            "member": violation is None,
            "definition_failure": violation,
            "pattern_witness": witness,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = ["MEMBER" if violation is None else "NON-MEMBER"]
        if violation is not None:
            lines.append(f"reason: {violation}")
        if witness is not None:
            lines.append(
                "pattern: {pattern} at positions {positions} with values {values}".format(
                    **witness
                )
            )
        _emit("\n".join(lines), args.out)
    return 0


def cmd_decompose(args) -> int:
    if args.group == "A":
        p = Permutation.parse(args.perm)
        e = canonical.decompose_A(p)
        total = canonical.maj_from_exponents(e)
        data = {
            "group": "A",
            "perm": str(p),
            "k": list(e.k),
            "sum": total,
            "maj": p.maj(),
            "consistent": total == p.maj(),
            "arc_by_exponents": canonical.is_arc_by_exponents(e),
            "recomposed": str(canonical.recompose_A(e)),
        }
        k_line = str(e)
    else:
        p = SignedPermutation.parse(args.perm)
        e = canonical.decompose_B(p)
        total = canonical.fmaj_from_exponents(e)
        data = {
            "group": "B",
            "perm": str(p),
            "k": list(e.k),
            "sum": total,
            "fmaj": p.fmaj(),
            "consistent": total == p.fmaj(),
            "b_arc_by_exponents": canonical.is_b_arc_by_exponents(e),
            "recomposed": str(canonical.recompose_B(e)),
        }
        k_line = str(e)
    if args.format == "json":
        _emit(json.dumps(data, indent=2), args.out)
    elif args.format == "csv":
        lines = ["field,value"] + [f"{k},\"{v}\"" if isinstance(v, list) else f"{k},{v}"
                                   for k, v in data.items()]
        _emit("\n".join(lines), args.out)
    else:
        lines = [f"group {data['group']}", f"perm {data['perm']}", k_line]
        for key in data:
            if key in ("group", "perm", "k"):
                continue
            lines.append(f"{key} {data[key]}")
        _emit("\n".join(lines), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.formula == "all":
        names = formulas.formula_names()
    elif args.formula in formulas.REGISTRY:
        names = [args.formula]
    else:
        known = ", ".join(formulas.formula_names(include_hidden=True))
        raise UsageError(f"unknown formula {args.formula!r}; choose from: all, {known}")
    rows = formulas.verify_many(names, range(1, args.n_max + 1))
    mismatched = sum(1 for r in rows if r.status == formulas.MISMATCH)
    if args.format == "json":
        _emit(json.dumps([r.to_json() for r in rows], indent=2), args.out)
    elif args.format == "csv":
        lines = ["formula,n,status,note"]
        lines += [f"{r.formula},{r.n},{r.status},\"{r.note}\"" for r in rows]
        _emit("\n".join(lines), args.out)
    else:
        lines = []
        for r in rows:
            line = f"{r.formula} n={r.n} {r.status}"
            if r.note and r.status != formulas.EQUAL:
                line += f" ({r.note})"
            lines.append(line)
            if r.status == formulas.MISMATCH and r.diff is not None:
                lines.append(f"  diff: {r.diff}")
        counts = {s: sum(1 for r in rows if r.status == s)
                  for s in (formulas.EQUAL, formulas.MISMATCH, formulas.OUT_OF_STATED_RANGE)}
        lines.append(
            "summary: {EQUAL} EQUAL, {MISMATCH} MISMATCH, "
            "{OUT_OF_STATED_RANGE} OUT_OF_STATED_RANGE".format(**counts)
        )
        _emit("\n".join(lines), args.out)
    return 1 if mismatched else 0


def cmd_table(args) -> int:
    if args.set not in _SIGNED_SETS and args.stat in ("fmaj", "fdes", "neg"):
        raise UsageError(f"statistic {args.stat!r} needs a signed set, not {args.set!r}")
    items = _generate(args.set, args.n, args.force)
    counts: dict[int, int] = {}
    for p in items:
        if args.stat == "des":
            value = p.des()
        elif args.stat == "maj":
            value = p.maj()
        elif args.stat == "inv":
            value = p.inv()
        elif args.stat == "fmaj":
            value = p.fmaj()
        elif args.stat == "fdes":
            value = p.fdes()
        else:
            value = p.neg()
        counts[value] = counts.get(value, 0) + 1
    note = None
    if args.stat == "inv" and args.set in _SIGNED_SETS:
        note = "inv computed on the absolute word"
    ordered = dict(sorted(counts.items()))
    total = sum(ordered.values())
    if args.format == "json":
        payload = {
            "set": args.set,
            "stat": args.stat,
            "n": args.n,
            "note": note,
            "counts": {str(k): v for k, v in ordered.items()},
            "total": total,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        lines = ["value,count"] + [f"{k},{v}" for k, v in ordered.items()]
        _emit("\n".join(lines), args.out)
    else:
        lines = []
        if note:
            lines.append(f"# {note}")
        lines += [f"{k} {v}" for k, v in ordered.items()]
        lines.append(f"total {total}")
        _emit("\n".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcperm",
        description="Exact combinatorics of arc permutations in types A and B.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("lines", "csv", "json"), default="lines")
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("enumerate", help="list a family in generator order")
    p.add_argument("--set", required=True, choices=sorted(_GENERATORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true", help="override the size guard")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="all statistics of one permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--group", choices=("A", "B"), default="B")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("check", help="membership verdict with diagnostics")
    p.add_argument("--perm", required=True)
    p.add_argument("--set", required=True, choices=sorted(_VIOLATIONS))
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="canonical cyclic factorization")
    p.add_argument("--perm", required=True)
    p.add_argument("--group", choices=("A", "B"), required=True)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="closed forms against brute-force enumerators")
    p.add_argument("--formula", required=True)
    p.add_argument("--n-max", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="distribution of one statistic over a family")
    p.add_argument("--stat", required=True, choices=("des", "maj", "inv", "fmaj", "fdes", "neg"))
    p.add_argument("--set", required=True, choices=sorted(_GENERATORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true", help="override the size guard")
    common(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
