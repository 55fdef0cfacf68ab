"""Command-line front end.

    classpres present    --family SL --dim 3 --q 4 [--quotient] [--format text] [--emit-tags]
    classpres generators --family Sp --dim 4 --q 3 [--role standard]
    classpres dictionary --family SU --dim 4 --q 3 [--direction std->pres]
    classpres enumerate  --family SL --dim 2 --q 5 [--subgroup "tau, delta"] [--torus]
    classpres verify     --grid builtin|FILE [--budget N] [--json] [--jobs N]
    classpres metrics    --family SL --dim 5..10 --q 3

JSON output carries schema_version.  Exit status is 2 for usage errors and
unsupported groups, 1 when verify finds a failure, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumerate import Overflow, enumerate_presentation
from .generators import PRES_TO_STD, STD_TO_PRES, presentation_generators, standard_generators, word_dictionary
from .groups import FAMILIES, GroupSpec, UnsupportedGroup, group_order
from .presentations import family_module, present, torus_presentation
from .slp import ExpansionBudget, Slp, parse_word_list, render
from .verify import Budget, builtin_grid, load_grid, verify_group, verify_grid

SCHEMA_VERSION = 1

ALIASES = {
    "sl": "SL", "sp": "Sp", "su": "SU",
    "omegaplus": "OmegaPlus", "omega+": "OmegaPlus", "o+": "OmegaPlus",
    "omegacircle": "OmegaCircle", "omega": "OmegaCircle", "o": "OmegaCircle",
    "omegaminus": "OmegaMinus", "omega-": "OmegaMinus", "o-": "OmegaMinus",
}


class UsageError(Exception):
    pass


def family_name(s: str) -> str:
    f = ALIASES.get(s.lower())
    if f is None:
        raise UsageError(f"unknown family {s!r} (choose from {', '.join(FAMILIES)})")
    return f


def int_range(s: str) -> list[int]:
    """'5', '5..9' or '3,9,27'."""
    out = []
    for part in s.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            out += list(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {s!r}")
    return out


def group_from(args) -> GroupSpec:
    if args.family is None or args.dim is None or args.q is None:
        raise UsageError("--family, --dim and --q are required")
    return GroupSpec(family_name(args.family), int(args.dim), int(args.q), args.quotient)


def emit(obj, out):
    obj = {"schema_version": SCHEMA_VERSION, **obj}
    out.write(json.dumps(obj, indent=None, separators=(",", ":")) + "\n")


def _fmt_entry(F, x) -> str:
    if x == 0:
        return "0"
    if F.k == 1:
        return str(F.coeffs(x)[0])
    k = F.log(x)
    return "1" if k == 0 else f"w^{k}"


def _matrix_text(m) -> list[str]:
    rows = [[_fmt_entry(m.F, x) for x in r] for r in m.rows()]
    width = max(len(c) for r in rows for c in r)
    return ["  " + " ".join(c.rjust(width) for c in r) for r in rows]


# -- subcommands --

def cmd_present(args, out):
    g = group_from(args)
    P = present(g, seed=args.seed)
    if args.format == "text":
        out.write(f"{g.name()}\n{P.to_text(tags=args.emit_tags)}\n")
        return 0
    data = P.to_json()
    if not args.emit_tags:
        for r in data["relators"]:
            del r["tag"], r["label"]
    emit(data, out)
    return 0


def cmd_generators(args, out):
    g = group_from(args)
    G = standard_generators(g) if args.role == "standard" else presentation_generators(g)
    if args.format == "text":
        F = next(iter(G.entries.values())).F
        out.write(f"{g.name()} {G.role} generators over GF({F.p}^{F.k})"
                  f"{'' if F.k == 1 else ', w = field generator'}\n")
        for k, m in G.entries.items():
            out.write(f"{k}:\n" + "\n".join(_matrix_text(m)) + "\n")
        return 0
    emit(G.to_json(), out)
    return 0


def cmd_dictionary(args, out):
    g = group_from(args)
    words = word_dictionary(g, args.direction)
    mod = family_module(g)
    T = g.tower()
    src = mod.generator_names(g, T) if args.direction == PRES_TO_STD else mod.std_names(g)
    if args.format == "text":
        out.write(f"{g.name()} {args.direction} over {', '.join(src)}\n")
        for k, w in words.items():
            out.write(f"  {k} = {render(w)}\n")
        return 0
    emit({"group": g.to_json(), "direction": args.direction, "source": src,
          "words": {k: {"text": render(w), "slp": Slp.from_word(w, src).to_json()} for k, w in words.items()}},
         out)
    return 0


def cmd_enumerate(args, out):
    g = group_from(args)
    if args.torus:
        tor = torus_presentation(g)
        P, expected = tor.presentation, tor.order
    else:
        P, expected = present(g, seed=args.seed), group_order(g)
    sub = parse_word_list(args.subgroup, P.generators) if args.subgroup else []
    cap = args.max_cosets if args.max_cosets else 4 * expected + 16
    try:
        r = enumerate_presentation(P, sub, max_cosets=cap, strategy=args.strategy, budget=args.budget)
    except Overflow as e:
        raise UsageError(f"overflow: more than {cap} cosets needed ({e})") from None
    except ExpansionBudget as e:
        raise UsageError(f"expansion budget exceeded ({e})") from None
    data = {"group": g.to_json(), "torus": args.torus, "subgroup": [render(w) for w in sub],
            "index": r.index, "defined": r.defined, "final": r.final, "max_live": r.max_live,
            "strategy": r.strategy, "max_cosets": cap}
    if not sub:
        data["expected"] = expected
    if args.format == "text":
        out.write(f"{g.name()}{' torus' if args.torus else ''}: index {r.index}, defined {r.defined}, "
                  f"max live {r.max_live}, {r.strategy}\n")
        return 0
    emit(data, out)
    return 0


def cmd_verify(args, out):
    budget = Budget()
    if args.budget is not None:
        budget.full = args.budget
    if args.grid:
        grid = builtin_grid(args.quotient) if args.grid == "builtin" else load_grid(args.grid)
    else:
        grid = [group_from(args)]
    reports = verify_grid(grid, budget, args.strategy, not args.no_enumerate, args.jobs)
    fails = sum(1 for r in reports if not r.ok)
    if args.json:
        emit({"reports": [r.to_json() for r in reports], "groups": len(reports), "failures": fails}, out)
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        out.write(f"{len(reports)} groups, {fails} with failures\n")
    return 1 if fails else 0


def cmd_metrics(args, out):
    if args.family is None or args.dim is None or args.q is None:
        raise UsageError("--family, --dim and --q are required")
    f = family_name(args.family)
    rows = []
    for d in int_range(str(args.dim)):
        for q in int_range(str(args.q)):
            g = GroupSpec(f, d, q, args.quotient)
            md = present(g, seed=args.seed).metadata()
            rows.append({"group": g.name(), "d": d, "q": q, "relators": md["relators"],
                         "non_torus_relators": md["non_torus_relators"],
                         "bit_length": md["bit_length"], "word_length": md["word_length"]})
    if args.format == "text":
        for r in rows:
            out.write(f"{r['group']}: relators {r['relators']} (non-torus {r['non_torus_relators']}), "
                      f"bit_length {r['bit_length']}, word_length {r['word_length']}\n")
        return 0
    emit({"metrics": rows}, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="classpres", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def group_flags(p, dim_type=int):
        p.add_argument("--family", help="SL, Sp, SU, OmegaPlus, OmegaCircle, OmegaMinus")
        p.add_argument("--dim", type=dim_type)
        p.add_argument("--q", type=dim_type)
        p.add_argument("--quotient", action="store_true", help="the central quotient")
        p.add_argument("--seed", type=int, default=0, help="seed for the SU(3,q) constant search")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("present", help="emit the presentation")
    group_flags(p)
    p.add_argument("--emit-tags", action="store_true")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("generators", help="presentation or standard generators as matrices")
    group_flags(p)
    p.add_argument("--role", choices=("presentation", "standard"), default="presentation")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("dictionary", help="words between presentation and standard generators")
    group_flags(p)
    p.add_argument("--direction", choices=(PRES_TO_STD, STD_TO_PRES), default=PRES_TO_STD)
    p.set_defaults(func=cmd_dictionary)

    p = sub.add_parser("enumerate", help="Todd-Coxeter coset enumeration")
    group_flags(p)
    p.add_argument("--max-cosets", type=int, default=None, help="default 4x the expected order")
    p.add_argument("--strategy", choices=("felsch", "hlt"), default="felsch")
    p.add_argument("--subgroup", default="", help="words separated by ';' or top-level commas")
    p.add_argument("--budget", type=int, default=10**6, help="max expanded relator symbols")
    p.add_argument("--torus", action="store_true", help="enumerate the torus normaliser instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="the verification harness")
    group_flags(p)
    p.add_argument("--grid", help="'builtin' or a grid file (JSON list or 'family d q [quotient]' lines)")
    p.add_argument("--budget", type=int, default=None, help="largest group order enumerated in full")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strategy", choices=("felsch", "hlt"), default="felsch")
    p.add_argument("--no-enumerate", action="store_true", help="skip full enumerations")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("metrics", help="relator counts and length metrics")
    group_flags(p, dim_type=str)
    p.set_defaults(func=cmd_metrics)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except UnsupportedGroup as e:
        msg = str(e)
        print(f"error: {msg if msg.startswith('unsupported') else 'unsupported: ' + msg}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
