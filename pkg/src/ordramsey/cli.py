"""``ordramsey`` command line.

Exit codes: 0 success, 1 usage or input error, 2 environment error (for
example a missing SAT solver), 3 internal consistency error (the oracle
rejected a solver model).
"""

from __future__ import annotations

import argparse
import logging
import shlex
import sys
from pathlib import Path

from . import __version__, constructions
from ._backend import describe as backend_name
from .cnf import encode, model_to_coloring, read_dimacs, write_dimacs
from .coloring import Coloring
from .embeddings import EmbedMode, count_embeddings, is_witness
from .errors import ConsistencyError, SolverEnvironmentError
from .graphs import CLASS_IDS, graph6_encode, make_class, parse_graph
from .groups import closure, parse_permutation
from .heuristic import CeParams, ce_search
from .search import RamseyProblem, ResultsCache, normalize_variant, mode_for, ramsey_number
from .solvers import resolve_solver, solve
from .tables import parse_range, table_sweep, to_csv, to_latex

VARIANT_CHOICES = ["ord", "cyc", "ref", "dih", "alt", "std", "ordered", "cyclic", "reflective",
                   "dihedral", "alternating", "standard", "group"]
COLORINGS = ["block", "block-cyclic", "circulant", "nested-ordered", "nested-cyclic", "nested-star"]


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _solver_identity(choice: str) -> str:
    path = resolve_solver(choice)
    return path if path else f"embedded-cdcl({backend_name()})"


def _provenance(argv: list[str], args) -> str:
    parts = [f"ordramsey {__version__}", f"argv={shlex.join(argv)}", f"backend={backend_name()}"]
    if getattr(args, "seed", None) is not None:
        parts.append(f"seed={args.seed}")
    if getattr(args, "solver", None) is not None:
        parts.append(f"solver={_solver_identity(args.solver)}")
    return "# provenance: " + " ".join(parts)


def _group(text: str, degree: int):
    gens = [parse_permutation(t) for t in text.split(";") if t.strip()]
    return closure(gens, degree=degree)


def _problem(args) -> RamseyProblem:
    variant = args.variant
    if variant != "group":
        if args.group1 or args.group2:
            raise UsageError("--group1/--group2 need --variant group")
        return RamseyProblem.of_variant(args.h1, args.h2, variant)
    if not (args.group1 and args.group2):
        raise UsageError("--variant group needs both --group1 and --group2")
    h1, h2 = parse_graph(args.h1), parse_graph(args.h2)
    m1 = EmbedMode.of_group(_group(args.group1, h1.order))
    m2 = EmbedMode.of_group(_group(args.group2, h2.order))
    return RamseyProblem(h1, h2, m1, m2, "custom", args.h1, args.h2)


def _single_mode(args, h) -> EmbedMode:
    if args.variant == "group":
        if not args.group:
            raise UsageError("--variant group needs --group")
        return EmbedMode.of_group(_group(args.group, h.order))
    return mode_for(args.variant, h)


def _read_witness(path: str) -> Coloring:
    return Coloring.from_graph6(Path(path).read_bytes().strip())


def _add_pair(p, groups=True):
    p.add_argument("--h1", required=True, help="pattern avoided in color 1, e.g. palt:5")
    p.add_argument("--h2", required=True, help="pattern avoided in color 2")
    p.add_argument("--variant", default="ord", choices=VARIANT_CHOICES)
    if groups:
        p.add_argument("--group1", help='generators for h1, e.g. "1 0 2; 0 2 1"')
        p.add_argument("--group2", help="generators for h2")


def _add_solver(p):
    p.add_argument("--solver", default="auto", help="auto, embedded, or a solver executable")
    p.add_argument("--timeout-s", type=float, default=None)


def build_parser() -> Parser:
    top = Parser(prog="ordramsey", description="Ordered, cyclic and permutational Ramsey numbers")
    top.add_argument("-v", "--verbose", action="store_true")
    sub = top.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("construct", help="print a pattern graph or write an explicit coloring")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--coloring", choices=COLORINGS)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--threshold", type=int)
    p.add_argument("--near", type=int, default=1, choices=[1, 2])
    p.add_argument("--out", help="stem for the .g6 file and its .txt sidecar")

    p = sub.add_parser("encode", help="write the avoidance CNF for K_n")
    _add_pair(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--no-dedup", action="store_true")

    p = sub.add_parser("solve", help="solve a DIMACS file")
    p.add_argument("--cnf", required=True)
    _add_solver(p)

    p = sub.add_parser("compute", help="exact value or lower bound by an upward scan")
    _add_pair(p)
    _add_solver(p)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--cache", default="results")
    p.add_argument("--force", action="store_true", help="ignore cached verdicts")

    p = sub.add_parser("verify", help="check a graph6 witness")
    p.add_argument("--witness", required=True)
    _add_pair(p)

    p = sub.add_parser("count", help="count forbidden embeddings in one color")
    p.add_argument("--witness", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--color", type=int, required=True, choices=[1, 2])
    p.add_argument("--variant", default="ord", choices=VARIANT_CHOICES)
    p.add_argument("--group")

    p = sub.add_parser("table", help="sweep two classes over parameter ranges")
    p.add_argument("--class1", required=True)
    p.add_argument("--class2", required=True)
    p.add_argument("--variant", default="ord", choices=VARIANT_CHOICES[:-1])
    p.add_argument("--a", required=True, help="e.g. 3..6 or 4,6,8")
    p.add_argument("--b", required=True)
    p.add_argument("--csv")
    p.add_argument("--latex")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--cache", default="results")
    p.add_argument("--force", action="store_true")
    _add_solver(p)

    p = sub.add_parser("heuristic", help="cross-entropy search for a witness at fixed n")
    _add_pair(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--population", type=int, default=100)
    p.add_argument("--generations", type=int, default=200)
    p.add_argument("--elite", type=float, default=0.1)
    p.add_argument("--smoothing", type=float, default=0.7)
    p.add_argument("--carryover", type=int, default=5)
    p.add_argument("--out", help="graph6 file for a found witness")
    return top


def cmd_construct(args, out):
    if args.coloring:
        c = _build_coloring(args)
        if args.out:
            keys = ("n", "threshold", "near") if args.coloring == "circulant" else ("a", "b")
            params = {k: getattr(args, k) for k in keys}
            g6, side = constructions.export_construction(c, args.out, args.coloring, params)
            print(f"wrote {g6} and {side}", file=out)
        print(c.to_graph6().decode(), file=out)
        return 0
    if not args.cls or args.n is None:
        raise UsageError("construct needs --class and --n, or --coloring")
    g = make_class(args.cls, args.n, args.j)
    print(graph6_encode(g).decode(), file=out)
    out.write(g.to_edge_text())
    return 0


def _build_coloring(args) -> Coloring:
    kind, a, b = args.coloring, args.a, args.b
    if kind == "circulant":
        if args.n is None or args.threshold is None:
            raise UsageError("circulant needs --n and --threshold")
        return constructions.circulant_coloring(constructions.CirculantSpec(args.n, args.threshold, args.near))
    if a is None or b is None:
        raise UsageError(f"{kind} needs --a and --b")
    fn = {
        "block": constructions.block_coloring,
        "block-cyclic": constructions.block_coloring_cyclic,
        "nested-ordered": constructions.nested_matching_ordered_coloring,
        "nested-cyclic": constructions.nested_matching_cyclic_coloring,
        "nested-star": constructions.nested_matching_star_cyclic_coloring,
    }[kind]
    return fn(a, b)


def cmd_encode(args, out):
    p = _problem(args)
    inst = encode(p.h1, p.mode1, p.h2, p.mode2, args.n, dedup=not args.no_dedup)
    Path(args.out).write_text(write_dimacs(inst))
    print(f"wrote {args.out}: {inst.num_vars} variables, {inst.num_clauses} clauses", file=out)
    return 0


def cmd_solve(args, out):
    inst = read_dimacs(Path(args.cnf).read_text())
    outcome = solve(inst, args.solver, args.timeout_s)
    word = {"sat": "SATISFIABLE", "unsat": "UNSATISFIABLE"}.get(outcome.verdict, "UNKNOWN")
    print(f"s {word}" + (f" ({outcome.reason})" if outcome.reason else ""), file=out)
    if outcome.is_sat:
        print("v " + " ".join(map(str, outcome.model)) + " 0", file=out)
        # echo the model as a coloring when the variable count is C(n, 2)
        n = next((k for k in range(1, 65) if k * (k - 1) // 2 == inst.num_vars), None)
        if n:
            c = model_to_coloring({abs(l): l > 0 for l in outcome.model}, n)
            print(f"coloring K_{n} (color-2 graph6): {c.to_graph6().decode()}", file=out)
    return 0


def cmd_compute(args, out):
    p = _problem(args)
    cache = ResultsCache(args.cache)
    res = ramsey_number(p, n_max=args.n_max, solver=args.solver, timeout_s=args.timeout_s,
                        cache=cache, force=args.force)
    name = f"R_{p.variant}"
    if res.exact:
        print(f"{name} = {res.lower}", file=out)
    else:
        why = res.provenance.get(res.lower, ("unknown",))[0]
        print(f"{name} >= {res.lower} (n={res.lower}: {why})", file=out)
    w = res.witness_paths.get(res.lower - 1)
    if w:
        print(f"witness: {cache.root / w}", file=out)
    return 0


def cmd_verify(args, out):
    p = _problem(args)
    c = _read_witness(args.witness)
    ok = is_witness(c, p.h1, p.h2, p.mode1, p.mode2)
    print("OK" if ok else "FAIL", file=out)
    return 0


def cmd_count(args, out):
    h = parse_graph(args.h)
    mode = _single_mode(args, h)
    c = _read_witness(args.witness)
    print(count_embeddings(c, h, args.color, mode), file=out)
    return 0


def cmd_table(args, out):
    recs = table_sweep(args.class1, args.class2, parse_range(args.a), parse_range(args.b),
                       args.variant, solver=args.solver, timeout_s=args.timeout_s,
                       n_max=args.n_max, cache=ResultsCache(args.cache), force=args.force,
                       jobs=args.jobs)
    text = to_csv(recs)
    if args.csv:
        Path(args.csv).write_text(text)
    if args.latex:
        Path(args.latex).write_text(to_latex(recs, normalize_variant(args.variant)))
    out.write(text)
    return 0


def cmd_heuristic(args, out):
    p = _problem(args)
    params = CeParams(population=args.population, elite_fraction=args.elite,
                      smoothing=args.smoothing, max_generations=args.generations,
                      carryover=args.carryover, seed=args.seed)
    c = ce_search(p, args.n, params,
                  on_generation=lambda g, best: print(f"generation {g}: best {best}", file=out))
    if c is None:
        print(f"no witness found at n={args.n}", file=out)
        return 0
    print(f"witness at n={args.n}: {c.to_graph6().decode()}", file=out)
    if args.out:
        Path(args.out).write_bytes(c.to_graph6() + b"\n")
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "encode": cmd_encode,
    "solve": cmd_solve,
    "compute": cmd_compute,
    "verify": cmd_verify,
    "count": cmd_count,
    "table": cmd_table,
    "heuristic": cmd_heuristic,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        print(_provenance(argv, args), file=err)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SolverEnvironmentError as exc:
        print(f"environment error: {exc}", file=err)
        return 2
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=err)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
