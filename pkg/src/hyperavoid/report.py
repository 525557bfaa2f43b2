"""CSV and figure output for benchmark reports.

The CSV is the machine-readable interface; the figure is a convenience
rendering of the same rows, written next to the CSV.  Norm axes use a log
scale because solver and sampler norms differ by orders of magnitude.
"""

from __future__ import annotations

import csv
from typing import IO, Sequence

from .bench import BenchConfig, CellReport

CSV_COLUMNS = [
    "n",
    "m",
    "instances",
    "solver_avg_norm",
    "solver_max_norm",
    "bound",
    "sampler_avg_norm",
    "sampler_failures",
    "solver_ms_avg",
    "sampler_ms_avg",
]


def config_note(cfg: BenchConfig) -> str:
    return (
        f"instances_per_cell={cfg.instances_per_cell} "
        f"samples={cfg.sampler.num_samples} "
        f"entry_bound={cfg.entry_bound} seed={cfg.seed}"
    )


def write_csv(rows: Sequence[CellReport], fp: IO[str], note: str = "") -> None:
    """Write report rows; an optional '#' comment line records the config."""
    if note:
        fp.write(f"# {note}\n")
    writer = csv.writer(fp)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.n,
                row.m,
                row.instances,
                f"{row.solver_avg_norm:.1f}",
                row.solver_max_norm,
                f"{row.bound:.1f}",
                "" if row.sampler_avg_norm is None else f"{row.sampler_avg_norm:.1f}",
                row.sampler_failures,
                f"{row.solver_ms_avg:.3f}",
                f"{row.sampler_ms_avg:.3f}",
            ]
        )


def render_figure(rows: Sequence[CellReport], path: str) -> None:
    """Plot average norms per cell and save the figure to path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n_values = sorted({r.n for r in rows})
    m_values = sorted({r.m for r in rows})
    fig, ax = plt.subplots(figsize=(6.4, 4.2))

    if len(m_values) == 1 and len(n_values) > 1:
        xkey, xlabel = "n", "dimension n"
    else:
        xkey, xlabel = "m", "constraints m"

    groups: dict[int, list[CellReport]] = {}
    for r in rows:
        groups.setdefault(r.n if xkey == "m" else r.m, []).append(r)

    for fixed, cell_rows in sorted(groups.items()):
        cell_rows.sort(key=lambda r: getattr(r, xkey))
        xs = [getattr(r, xkey) for r in cell_rows]
        suffix = f" (n={fixed})" if xkey == "m" and len(groups) > 1 else ""
        if xkey == "n" and len(groups) > 1:
            suffix = f" (m={fixed})"
        sampler_pts = [
            (x, r.sampler_avg_norm)
            for x, r in zip(xs, cell_rows)
            if r.sampler_avg_norm is not None
        ]
        if sampler_pts:
            ax.plot(*zip(*sampler_pts), "o-", label=f"sampling best-of-N{suffix}")
        ax.plot(xs, [r.solver_avg_norm for r in cell_rows], "s-", label=f"solver{suffix}")
        ax.plot(
            xs,
            [r.bound for r in cell_rows],
            "--",
            color="gray",
            label=f"bound (m+n)/2{suffix}",
        )

    ax.set_xlabel(xlabel)
    ax.set_ylabel("average l1 norm")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
