"""Command-line workbench over the duality engine.

Commands: homology, verify-pair, verify-triad, thom, construct, cover,
scenario, kunneth.  Inputs and outputs are JSON; --summary switches to
a human-readable table.  Canonical JSON output carries no wall-clock
data, so identical inputs give byte-identical output.

Exit codes: 0 success / positive verdict, 2 parse or input error,
3 certified negative verdict, 4 undecided, 5 scenario mismatch.
"""

import argparse
import json
import sys

from . import __version__
from .coset import EnumerationOverflow, find_subgroup_words, todd_coxeter
from .cover import build_cover
from .duality import (DEFAULT_CELL_BUDGET, DEFAULT_MAX_COSETS,
                      find_thom_class, verify_pair, verify_thom_class,
                      verify_triad)
from .kunneth import kunneth_check
from .localsystem import (LocalSystem, compile_edge_system, sign_system,
                          trivial_system)
from .presentation import fundamental_presentation
from .scenarios import SCENARIO_NAMES, run_scenario
from .simplicial import (SimplicialComplex, SimplicialPair, SimplicialTriad,
                         cone, double, glue, product, product_pair, puncture)
from .twisted import twisted_cochain_complex, twisted_complex

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NEGATIVE = 3
EXIT_UNDECIDED = 4
EXIT_MISMATCH = 5

_VERDICT_EXIT = {
    "poincare-pair": EXIT_OK,
    "poincare-triad": EXIT_OK,
    "not-poincare-pair": EXIT_NEGATIVE,
    "not-poincare-triad": EXIT_NEGATIVE,
    "undecided": EXIT_UNDECIDED,
}


class InputError(Exception):
    """Bad file contents or inconsistent command inputs (exit 2)."""


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise InputError(
            f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e


def load_spatial(path):
    """Complex, pair, or triad from a JSON file, by its keys."""
    obj = _load_json(path)
    try:
        if "sub1_facets" in obj or "sub2_facets" in obj:
            return SimplicialTriad.from_json(obj)
        if "sub_facets" in obj:
            return SimplicialPair.from_json(obj)
        return SimplicialComplex.from_json(obj)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: {e}") from e


def _as_pair(spatial, path):
    if isinstance(spatial, SimplicialTriad):
        raise InputError(f"{path}: a triad file; use verify-triad")
    if isinstance(spatial, SimplicialComplex):
        return SimplicialPair(spatial)
    return spatial


def load_system(path, pres):
    """Local system from a JSON file over the given presentation.

    Kinds: {"kind": "trivial", "rank": r}, {"kind": "sign",
    "character": [0/1 per generator]}, or explicit matrices as written
    by LocalSystem.to_json.
    """
    obj = _load_json(path)
    try:
        kind = obj.get("kind", "matrices")
        if kind == "trivial":
            return trivial_system(pres, obj.get("rank", 1))
        if kind == "sign":
            return sign_system(pres, obj["character"])
        if kind == "matrices" and "generators" in obj:
            return LocalSystem.from_json(obj, pres)
        raise InputError(f"{path}: unknown system kind {kind!r}")
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: {e}") from e


def load_class(path):
    obj = _load_json(path)
    if not isinstance(obj, dict) or "degree" not in obj \
            or "coeffs" not in obj:
        raise InputError(f"{path}: a class file needs degree and coeffs")
    return obj


def _report(command, args, **fields):
    out = {"command": command,
           "fingerprint": {"seed": args.seed, "version": __version__}}
    out.update(fields)
    return out


def _emit(args, obj, summary):
    if args.summary:
        print(summary)
    else:
        print(json.dumps(obj, indent=1, sort_keys=True))


def _write_output(args, obj):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            json.dump(obj, fh, indent=1, sort_keys=True)
            fh.write("\n")
        return args.output
    return None


def _fmt_group(g):
    parts = ["Z"] * g["rank"] if g["rank"] <= 1 else [f"Z^{g['rank']}"]
    parts += [f"Z/{t}" for t in g["torsion"]]
    return " + ".join(parts) if parts else "0"


def _parse_degrees(spec, dim):
    if spec is None:
        return list(range(dim + 1))
    try:
        if ":" in spec:
            lo, hi = spec.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(spec)]
    except ValueError as e:
        raise InputError(f"bad degree range {spec!r}") from e


def cmd_homology(args):
    pair = _as_pair(load_spatial(args.file), args.file)
    pres = fundamental_presentation(pair.total)
    system = load_system(args.system, pres) if args.system \
        else trivial_system(pres)
    edges = compile_edge_system(system, pair.total)
    tw = twisted_complex(pair, edges, relative=args.relative)
    degrees = _parse_degrees(args.degrees, pair.total.dim)
    hom = {str(p): tw.homology(p).to_json() for p in degrees}
    out = _report("homology", args, relative=args.relative,
                  system_rank=system.rank, homology=hom)
    rows = [f"H_{p:<3} {_fmt_group(hom[str(p)])}" for p in map(str, degrees)]
    _emit(args, out, "\n".join(rows))
    return EXIT_OK


def cmd_verify_pair(args):
    pair = _as_pair(load_spatial(args.file), args.file)
    rep = verify_pair(pair, max_cosets=args.max_cosets,
                      cell_budget=args.cell_budget)
    out = _report("verify-pair", args, report=rep.to_json())
    _emit(args, out, rep.summary())
    return _VERDICT_EXIT[rep.verdict]


def cmd_verify_triad(args):
    spatial = load_spatial(args.file)
    if not isinstance(spatial, SimplicialTriad):
        raise InputError(f"{args.file}: verify-triad needs a triad file "
                         "with sub1_facets and sub2_facets")
    rep = verify_triad(spatial, max_cosets=args.max_cosets,
                       cell_budget=args.cell_budget)
    out = _report("verify-triad", args, report=rep.to_json())
    _emit(args, out, rep.summary())
    return _VERDICT_EXIT[rep.verdict]


def cmd_thom(args):
    pair = _as_pair(load_spatial(args.file), args.file)
    if args.cocycle:
        if not args.system:
            raise InputError("--cocycle needs --system for its "
                             "coefficient system")
        pres = fundamental_presentation(pair.total)
        system = load_system(args.system, pres)
        eo2 = compile_edge_system(system, pair.total)
        obj = load_class(args.cocycle)
        k = obj["degree"]
        tw_u = twisted_cochain_complex(pair, eo2, relative=True)
        _, u = tw_u.chain_from_class(obj)
        verdict = verify_thom_class(pair, eo2, u, k,
                                    max_cosets=args.max_cosets,
                                    cell_budget=args.cell_budget)
        cocycle_json = tw_u.class_to_json(k, u)
    else:
        if args.degree is None:
            raise InputError("thom needs --degree when no cocycle is given")
        system, u, verdict = find_thom_class(pair, args.degree,
                                             max_cosets=args.max_cosets,
                                             cell_budget=args.cell_budget)
        cocycle_json = None
        if system is not None:
            eo2 = compile_edge_system(system, pair.total)
            tw_u = twisted_cochain_complex(pair, eo2, relative=True)
            cocycle_json = tw_u.class_to_json(args.degree, u)
    out = _report("thom", args, verdict=verdict.to_json(),
                  cocycle=cocycle_json)
    word = {True: "thom-class", False: "no-thom-class",
            None: "undecided"}[verdict.holds]
    lines = [f"verdict    {word}", f"degree     {verdict.k}"]
    lines += [f"note       {n}" for n in verdict.notes]
    _emit(args, out, "\n".join(lines))
    return {True: EXIT_OK, False: EXIT_NEGATIVE,
            None: EXIT_UNDECIDED}[verdict.holds]


def _construct(args):
    op = args.op
    ins = [load_spatial(p) for p in args.inputs]

    def need(k):
        if len(ins) != k:
            raise InputError(f"construct {op} takes {k} input file(s)")

    def plain(i):
        s = ins[i]
        if isinstance(s, SimplicialComplex):
            return s
        if isinstance(s, SimplicialPair) and s.sub.size() == 0:
            return s.total
        raise InputError(f"{args.inputs[i]}: construct {op} needs a "
                         "complex file without a sub")

    if op == "cone":
        need(1)
        return cone(plain(0))
    if op == "product":
        need(2)
        if all(isinstance(s, SimplicialComplex) for s in ins):
            return product(ins[0], ins[1])
        pairs = [s if isinstance(s, SimplicialPair) else SimplicialPair(s)
                 for s in ins]
        if any(isinstance(s, SimplicialTriad) for s in ins):
            raise InputError("construct product takes complexes or pairs")
        return product_pair(pairs[0], pairs[1])
    if op == "double":
        need(1)
        if isinstance(ins[0], SimplicialComplex):
            raise InputError(f"{args.inputs[0]}: double needs a pair or "
                             "triad file")
        return double(ins[0])
    if op == "glue":
        need(2)
        halves = [_as_pair(s, p) for s, p in zip(ins, args.inputs)]
        glued, _, _ = glue(halves[0], halves[1])
        return glued
    if op == "puncture":
        need(1)
        return puncture(plain(0), args.facet)
    raise InputError(f"unknown construction {op!r}")


def cmd_construct(args):
    result = _construct(args)
    result_json = result.to_json()
    total = result.total if hasattr(result, "total") else result
    written = _write_output(args, result_json)
    out = _report("construct", args, op=args.op, result=result_json,
                  f_vector=list(total.f_vector()),
                  euler_characteristic=total.euler_characteristic(),
                  written=written)
    lines = [f"construct  {args.op}",
             f"f-vector   {list(total.f_vector())}",
             f"euler      {total.euler_characteristic()}"]
    if written:
        lines.append(f"written    {written}")
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def cmd_cover(args):
    pair = _as_pair(load_spatial(args.file), args.file)
    pres = fundamental_presentation(pair.total)
    if not pres.has_finite_abelianization():
        out = _report("cover", args, error="fundamental group is "
                      "infinite; no finite cover is enumerable")
        _emit(args, out, "fundamental group infinite; cannot enumerate")
        return EXIT_UNDECIDED
    try:
        table = todd_coxeter(pres, (), max_cosets=args.max_cosets)
        if args.index is not None:
            order = table.degree
            if args.index < 1 or order % args.index:
                raise InputError(f"index {args.index} does not divide "
                                 f"the group order {order}")
            if args.index == 1:
                words = [(g,) for g in range(1, pres.ngens + 1)]
            else:
                words = find_subgroup_words(pres, table,
                                            order // args.index)
            table = todd_coxeter(pres, words, max_cosets=args.max_cosets)
            if table.degree != args.index:
                raise ValueError("subgroup search missed the index")
        cover = build_cover(pair, pres=pres, table=table,
                            max_cosets=args.max_cosets)
    except EnumerationOverflow:
        out = _report("cover", args, error="coset enumeration exceeded "
                      f"the budget of {args.max_cosets}")
        _emit(args, out, "coset enumeration exceeded the budget")
        return EXIT_UNDECIDED
    except ValueError as e:
        raise InputError(str(e)) from e
    result_json = cover.pair.to_json()
    written = _write_output(args, result_json)
    total = cover.pair.total
    out = _report("cover", args, degree=cover.degree, result=result_json,
                  f_vector=list(total.f_vector()),
                  euler_characteristic=total.euler_characteristic(),
                  written=written)
    lines = [f"degree     {cover.degree}",
             f"f-vector   {list(total.f_vector())}",
             f"euler      {total.euler_characteristic()}"]
    if written:
        lines.append(f"written    {written}")
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def cmd_scenario(args):
    res = run_scenario(args.name, large=args.large,
                       max_cosets=args.max_cosets)
    out = _report("scenario", args, **res.to_json())
    _emit(args, out, res.summary())
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_kunneth(args):
    spa = _as_pair(load_spatial(args.file_a), args.file_a)
    spb = _as_pair(load_spatial(args.file_b), args.file_b)
    pres_a = fundamental_presentation(spa.total)
    pres_b = fundamental_presentation(spb.total)
    sys_a = load_system(args.system_a, pres_a) if args.system_a \
        else trivial_system(pres_a)
    sys_b = load_system(args.system_b, pres_b) if args.system_b \
        else trivial_system(pres_b)
    rep = kunneth_check(spa, sys_a, spb, sys_b)
    out = _report("kunneth", args, **rep.to_json())
    _emit(args, out, rep.summary())
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--summary", action="store_true",
                        help="human-readable table instead of JSON")
    common.add_argument("--seed", type=int, default=0,
                        help="echoed in the output fingerprint")
    common.add_argument("--max-cosets", type=int,
                        default=DEFAULT_MAX_COSETS,
                        help="coset enumeration budget")
    common.add_argument("--cell-budget", type=int,
                        default=DEFAULT_CELL_BUDGET,
                        help="cells x group-order budget for full "
                             "group-ring certification")
    common.add_argument("--large", action="store_true",
                        help="larger variant where a command offers one")

    p = argparse.ArgumentParser(
        prog="pdpair",
        description="Exact duality verdicts for finite simplicial pairs.")
    p.add_argument("--version", action="version",
                   version=f"pdpair {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("homology", parents=[common],
                       help="twisted homology of a complex or pair")
    q.add_argument("file")
    q.add_argument("--system", help="coefficient system JSON file")
    q.add_argument("--relative", action="store_true")
    q.add_argument("--degrees", help="P or LO:HI (default: all)")
    q.set_defaults(func=cmd_homology)

    q = sub.add_parser("verify-pair", parents=[common],
                       help="duality verdict for a pair")
    q.add_argument("file")
    q.set_defaults(func=cmd_verify_pair)

    q = sub.add_parser("verify-triad", parents=[common],
                       help="duality verdict for a triad")
    q.add_argument("file")
    q.set_defaults(func=cmd_verify_triad)

    q = sub.add_parser("thom", parents=[common],
                       help="search or check a Thom class")
    q.add_argument("file")
    q.add_argument("--degree", "-k", type=int)
    q.add_argument("--system", help="system file for a supplied cocycle")
    q.add_argument("--cocycle", help="class JSON file to check")
    q.set_defaults(func=cmd_thom)

    q = sub.add_parser("construct", parents=[common],
                       help="build a new complex or pair")
    q.add_argument("op", choices=("cone", "product", "double", "glue",
                                  "puncture"))
    q.add_argument("inputs", nargs="+")
    q.add_argument("--output", "-o")
    q.add_argument("--facet", type=int, default=0,
                   help="facet index for puncture")
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("cover", parents=[common],
                       help="finite cover from coset enumeration")
    q.add_argument("file")
    q.add_argument("--index", type=int,
                   help="cover degree (default: universal cover)")
    q.add_argument("--output", "-o")
    q.set_defaults(func=cmd_cover)

    q = sub.add_parser("scenario", parents=[common],
                       help="run a pinned end-to-end scenario")
    q.add_argument("name", choices=SCENARIO_NAMES)
    q.set_defaults(func=cmd_scenario)

    q = sub.add_parser("kunneth", parents=[common],
                       help="product homology against the formula")
    q.add_argument("file_a")
    q.add_argument("file_b")
    q.add_argument("--system-a", help="system file for the first factor")
    q.add_argument("--system-b", help="system file for the second factor")
    q.set_defaults(func=cmd_kunneth)
    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
