"""Parameter sweeps over two graph classes, with CSV and LaTeX output."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .search import RamseyProblem, RamseyResult, ResultsCache, normalize_variant, ramsey_number

VARIANT_TEX = {"ord": "ord", "cyc": "cyc", "ref": "ref", "dih": "dih", "alt": "alt", "std": "std"}


@dataclass
class TableRecord:
    a: int
    b: int
    result: RamseyResult

    @property
    def exact(self) -> bool:
        return self.result.exact

    @property
    def text(self) -> str:
        r = self.result
        return str(r.lower) if r.exact else f">={r.lower}"

    @property
    def witness(self) -> str:
        return self.result.witness_paths.get(self.result.lower - 1, "")


def class_spec(template: str, value: int) -> str:
    """``pmon`` -> ``pmon:7``; templates with ``{}`` are filled in, e.g. ``qmon:5:{}``."""
    if "{}" in template:
        return template.format(value)
    return f"{template}:{value}"


def parse_range(text: str) -> list[int]:
    """``3..6`` -> [3, 4, 5, 6]; ``4,6,8`` -> [4, 6, 8]; ``4..16/2`` steps by 2."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, _, rest = part.partition("..")
            hi, _, step = rest.partition("/")
            out.extend(range(int(lo), int(hi) + 1, int(step) if step else 1))
        elif part:
            out.append(int(part))
    return out


def table_sweep(
    class1: str,
    class2: str,
    a_values: Iterable[int],
    b_values: Iterable[int],
    variant: str,
    solver: str | None = "auto",
    timeout_s: float | None = None,
    n_max: int = 64,
    cache: ResultsCache | None = None,
    force: bool = False,
    jobs: int = 1,
) -> list[TableRecord]:
    """One record per cell; a sweep of a class against itself keeps ``b >= a``."""
    variant = normalize_variant(variant)
    cells = [
        (a, b)
        for a in a_values
        for b in b_values
        if not (class1 == class2 and b < a)
    ]

    def run(cell):
        a, b = cell
        p = RamseyProblem.of_variant(class_spec(class1, a), class_spec(class2, b), variant)
        return TableRecord(a, b, ramsey_number(p, n_max=n_max, solver=solver, timeout_s=timeout_s,
                                               cache=cache, force=force))

    if jobs <= 1:
        return [run(c) for c in cells]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, cells))


def to_csv(records: list[TableRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "value", "exact", "witness"])
    for r in records:
        w.writerow([r.a, r.b, r.text, "true" if r.exact else "false", r.witness])
    return buf.getvalue()


def to_latex(records: list[TableRecord], variant: str = "ord", caption: str | None = None) -> str:
    a_vals = sorted({r.a for r in records})
    b_vals = sorted({r.b for r in records})
    cell = {(r.a, r.b): r for r in records}
    lines = [
        "\\begin{tabular}{|c||" + "r" * len(b_vals) + "|}",
        "\\hline",
        "\\backslashbox{$a$}{$b$} & " + " & ".join(f"${b}$" for b in b_vals) + "\\\\",
        "\\hline",
        "\\hline",
    ]
    for a in a_vals:
        row = []
        for b in b_vals:
            r = cell.get((a, b))
            if r is None:
                row.append("")
            elif r.exact:
                row.append(f"${r.result.lower}$")
            else:
                row.append(f"$\\ge {r.result.lower}$")
        lines.append(f"${a}$ & " + " & ".join(row) + "\\\\")
    lines += ["\\hline", "\\end{tabular}"]
    body = "\n".join(lines) + "\n"
    if caption:
        sub = VARIANT_TEX.get(variant, variant)
        body = (
            "\\begin{table}[H]\n\\centering\n\\footnotesize\n"
            + body
            + f"\\caption{{{caption} ($R_\\mathrm{{{sub}}}$)}}\n\\end{{table}}\n"
        )
    return body
