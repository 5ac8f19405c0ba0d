"""Figure rendering for the CLI report paths.

Figures are written straight to files next to the delimited output, so the
Agg backend is forced before pyplot is touched; nothing here requires a
display.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["plot_sweep", "plot_ensemble"]


def plot_sweep(records, path: str) -> None:
    """Four-curve bounds picture of one mixing-parameter sweep.

    ``records`` are the sweep rows (attributes d, p, lower, upper_diag,
    upper_sqrt, exact_cg, oracle_cg).
    """
    ps = [r.p for r in records]
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    ax.plot(ps, [r.exact_cg for r in records], "-", color="C0", label="exact")
    ax.plot(ps, [r.upper_sqrt for r in records], ":", color="C3", lw=2.2,
            label="upper (sqrt diagonal)")
    ax.plot(ps, [r.upper_diag for r in records], "--", color="C2",
            label="upper (max diagonal)")
    ax.plot(ps, [r.lower for r in records], "-.", color="C1", label="lower")
    oracle = [(r.p, r.oracle_cg) for r in records if r.oracle_cg is not None]
    if oracle:
        ax.plot(*zip(*oracle), "o", color="k", ms=3.5, label="simplex oracle")
    ax.set_xlabel("mixing parameter p")
    ax.set_ylabel("geometric coherence")
    ax.set_title(f"bounds on the maximally coherent mixed family, d={records[0].d}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_ensemble(rows, summary, path: str) -> None:
    """Bound-gap picture of one random ensemble run.

    Left: reference C_g per state against its bracket. Right: histogram of
    the two gaps.
    """
    order = sorted(range(len(rows)), key=lambda i: rows[i].oracle_cg)
    oracle = [rows[i].oracle_cg for i in order]
    lower = [rows[i].lower for i in order]
    upper = [rows[i].upper for i in order]

    fig, (left, right) = plt.subplots(1, 2, figsize=(10.0, 4.2))
    xs = range(len(rows))
    left.fill_between(xs, lower, upper, color="C0", alpha=0.25, label="bracket")
    left.plot(xs, oracle, ".", color="k", ms=3, label="simplex oracle")
    left.set_xlabel("state (sorted by oracle value)")
    left.set_ylabel("geometric coherence")
    left.set_title(f"bracket vs oracle, violations={summary.violation_count}")
    left.legend(frameon=False)

    right.hist([r.gap_lower for r in rows], bins=40, alpha=0.6, label="oracle - lower")
    right.hist([r.gap_upper for r in rows], bins=40, alpha=0.6, label="upper - oracle")
    right.set_xlabel("gap")
    right.set_ylabel("states")
    right.set_title("bound gaps")
    right.legend(frameon=False)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
