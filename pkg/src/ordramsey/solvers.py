"""SAT verdicts from an external DIMACS solver or the embedded CDCL core.

External solvers follow SAT-competition conventions: exit code 10 or
``s SATISFIABLE`` with ``v`` lines, exit code 20 or ``s UNSATISFIABLE``.
Anything else, including a timeout, is ``unknown``, which callers must
surface as an open bound rather than a guess.
"""

from __future__ import annotations

import logging
import os
import shutil
import subprocess
import tempfile
import time
from dataclasses import dataclass

from ._backend import satcore
from .cnf import CnfInstance, model_to_coloring, parse_verdict, write_dimacs
from .embeddings import is_witness
from .errors import ConsistencyError, FormatError, SolverEnvironmentError

log = logging.getLogger(__name__)

SOLVER_ENV = "RAMSEY_SAT_SOLVER"


@dataclass
class SolveOutcome:
    verdict: str  # "sat" | "unsat" | "unknown"
    model: list[int] | None = None
    reason: str | None = None
    wall_s: float = 0.0
    solver: str = ""
    output: str = ""

    @property
    def is_sat(self) -> bool:
        return self.verdict == "sat"


def _full_model(values: dict[int, bool], num_vars: int) -> list[int]:
    return [v if values.get(v) else -v for v in range(1, num_vars + 1)]


def solve_external(
    inst: CnfInstance,
    solver_path: str,
    timeout_s: float | None = None,
    extra_args: tuple[str, ...] = (),
) -> SolveOutcome:
    exe = shutil.which(solver_path) or solver_path
    if not (os.path.isfile(exe) and os.access(exe, os.X_OK)):
        raise SolverEnvironmentError(f"SAT solver {solver_path!r} is not an executable file")
    ident = os.path.basename(exe)
    if timeout_s is not None and timeout_s <= 0:
        return SolveOutcome("unknown", reason="timeout", solver=ident)
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as fh:
        fh.write(write_dimacs(inst))
        path = fh.name
    start = time.perf_counter()
    try:
        proc = subprocess.run(
            [exe, *extra_args, path], capture_output=True, text=True, timeout=timeout_s
        )
    except subprocess.TimeoutExpired as exc:
        out = exc.stdout.decode() if isinstance(exc.stdout, bytes) else (exc.stdout or "")
        return SolveOutcome(
            "unknown", reason="timeout", wall_s=time.perf_counter() - start, solver=ident, output=out
        )
    except OSError as exc:
        raise SolverEnvironmentError(f"cannot run {exe}: {exc}") from exc
    finally:
        os.unlink(path)
    wall = time.perf_counter() - start
    try:
        verdict, values = parse_verdict(proc.stdout)
    except FormatError as exc:
        return SolveOutcome("unknown", reason=f"unparsable output: {exc}", wall_s=wall,
                            solver=ident, output=proc.stdout)
    if verdict == "sat" or (verdict is None and proc.returncode == 10):
        return SolveOutcome("sat", _full_model(values, inst.num_vars), wall_s=wall,
                            solver=ident, output=proc.stdout)
    if verdict == "unsat" or (verdict is None and proc.returncode == 20):
        return SolveOutcome("unsat", wall_s=wall, solver=ident, output=proc.stdout)
    return SolveOutcome("unknown", reason=f"exit code {proc.returncode}, no verdict",
                        wall_s=wall, solver=ident, output=proc.stdout)


def solve_embedded(inst: CnfInstance) -> SolveOutcome:
    start = time.perf_counter()
    s = satcore.CdclSolver(inst.num_vars, inst.clauses)
    sat = s.solve()
    wall = time.perf_counter() - start
    ident = f"embedded-cdcl({'compiled' if satcore.__name__.endswith('_satcore') else 'python'})"
    if sat:
        return SolveOutcome("sat", s.model(), wall_s=wall, solver=ident,
                            output=f"conflicts={s.conflicts}")
    return SolveOutcome("unsat", wall_s=wall, solver=ident, output=f"conflicts={s.conflicts}")


def resolve_solver(choice: str | None = "auto") -> str | None:
    """Map ``auto``/``embedded``/path to an executable path, or ``None`` for embedded."""
    if choice in (None, "auto"):
        env = os.environ.get(SOLVER_ENV)
        if env:
            return env
        return shutil.which("kissat")
    if choice == "embedded":
        return None
    return choice


def check_outcome(inst: CnfInstance, outcome: SolveOutcome) -> None:
    """Re-check a sat model against the clauses and, when known, the patterns."""
    if not outcome.is_sat:
        return
    chosen = set(outcome.model)
    for c in inst.clauses:
        if not any(lit in chosen for lit in c):
            raise ConsistencyError(f"{outcome.solver} model violates clause {list(c)}")
    meta = inst.metadata
    if "h1" in meta:
        coloring = model_to_coloring({abs(l): l > 0 for l in outcome.model}, meta["n"])
        if not is_witness(coloring, meta["h1"], meta["h2"], meta["mode1"], meta["mode2"]):
            raise ConsistencyError(
                f"embedding oracle rejects the {outcome.solver} model at n={meta['n']}"
            )


def solve(inst: CnfInstance, solver: str | None = "auto", timeout_s: float | None = None) -> SolveOutcome:
    path = resolve_solver(solver)
    if path is None:
        outcome = solve_embedded(inst)
    else:
        outcome = solve_external(inst, path, timeout_s)
    check_outcome(inst, outcome)
    log.debug("%s: %s in %.3fs", outcome.solver, outcome.verdict, outcome.wall_s)
    return outcome
