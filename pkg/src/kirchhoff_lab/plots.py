"""Figure rendering for the sweep reports.

Each sweep writes a delimited CSV plus a PNG rendered from the same rows,
so the numbers and the picture can never drift apart.  Agg backend only;
nothing here opens a window.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_growth_plot(rows, png_path) -> None:
    """Kf of the weighted nested family against its linear asymptote.

    rows: (n, kf_closed_float, kf_numeric_or_None, y_asym_float, gap_float)
    """
    ns = [r[0] for r in rows]
    kf = [r[1] for r in rows]
    asym = [r[3] for r in rows]
    fig, (ax, axg) = plt.subplots(
        2, 1, figsize=(7, 7), sharex=True, height_ratios=[3, 1]
    )
    ax.plot(ns, kf, "o", mfc="none", color="tab:blue", label="Kf (closed form)")
    ax.plot(ns, asym, "-", color="tab:red", label="17n/6 - 6")
    num = [(r[0], r[2]) for r in rows if r[2] is not None]
    if num:
        ax.plot(
            [x for x, _ in num],
            [y for _, y in num],
            "x",
            color="tab:green",
            label="Kf (eigenvalue route)",
        )
    ax.set_ylabel("Kirchhoff index")
    ax.legend()
    axg.semilogy(ns, [r[4] for r in rows], "s-", ms=3, color="tab:gray")
    axg.set_xlabel("n")
    axg.set_ylabel("gap above asymptote")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def render_comparison_plot(rows, png_path) -> None:
    """Kf growth of the five graph classes against vertex count.

    rows: (vertices, kf_path, kf_cycle, kf_nested_unit, kf_fourreg_or_None,
           kf_nested_weighted_or_None)
    """
    xs = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 5))
    series = [
        (1, "path", "tab:blue", "o-"),
        (2, "cycle", "tab:orange", "s-"),
        (3, "nested (unit)", "tab:green", "^-"),
        (4, "4-regular", "tab:red", "v-"),
        (5, "nested (weighted)", "tab:purple", "d-"),
    ]
    for col, label, color, style in series:
        pts = [(x, r[col]) for x, r in zip(xs, rows) if r[col] is not None]
        ax.plot(
            [x for x, _ in pts], [y for _, y in pts], style, ms=4,
            color=color, label=label,
        )
    ax.set_xlabel("number of vertices")
    ax.set_ylabel("Kirchhoff index")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
