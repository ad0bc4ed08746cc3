"""Report figures rendered to files alongside the text output.

These are working diagrams for the analysis verbs, not score engraving
and not a geometric Tonnetz embedding: a pitch-class clock with chord
polygons and inversion axes, root-motion plots for progressions, and the
parsimony ranking chart.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import ParsimonyRow, Progression, TransformationStep
from .pitchspace import PITCH_NAMES
from .transforms import inversion_axis
from .triads import ConsonantTriad


def _clock_xy(ticks24: float) -> tuple[float, float]:
    """Map 24ths-of-a-revolution (0 at twelve o'clock, clockwise) to x, y."""
    angle = math.pi / 2 - 2 * math.pi * ticks24 / 24
    return math.cos(angle), math.sin(angle)


def _draw_clock(ax) -> None:
    circle = plt.Circle((0, 0), 1.0, fill=False, color="0.6")
    ax.add_patch(circle)
    for pc in range(12):
        x, y = _clock_xy(2 * pc)
        ax.plot([x], [y], marker="o", color="0.4", markersize=3)
        lx, ly = _clock_xy(2 * pc)
        ax.annotate(PITCH_NAMES[pc], (1.14 * lx, 1.14 * ly),
                    ha="center", va="center", fontsize=9)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")


def _draw_triad(ax, triad: ConsonantTriad, color: str, style: str) -> None:
    pts = [_clock_xy(2 * int(t)) for t in triad.tones]
    pts.append(pts[0])
    xs, ys = zip(*pts)
    ax.plot(xs, ys, linestyle=style, color=color, linewidth=1.6,
            label=triad.name())


def save_triad_clock(triad: ConsonantTriad, path: str | Path,
                     transformed: Optional[ConsonantTriad] = None,
                     axis_letters: Sequence[str] = ()) -> Path:
    """Draw a triad polygon on the pitch-class clock, with optional extras.

    ``transformed`` adds a dashed second polygon; each letter in
    ``axis_letters`` draws the inversion axis that the corresponding
    operation reflects the starting triad across.
    """
    fig, ax = plt.subplots(figsize=(4.6, 4.6))
    _draw_clock(ax)
    _draw_triad(ax, triad, "tab:blue", "-")
    if transformed is not None and transformed != triad:
        _draw_triad(ax, transformed, "tab:red", "--")
    for letter in axis_letters:
        lo, hi = inversion_axis(letter, triad)
        (x1, y1), (x2, y2) = _clock_xy(lo), _clock_xy(hi)
        ax.plot([x1, x2], [y1, y2], color="0.3", linewidth=0.9, linestyle=":")
        ax.annotate(letter, (1.04 * x1, 1.04 * y1), fontsize=8, color="0.3")
    ax.legend(loc="lower right", fontsize=8, frameon=False)
    out = Path(path)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return out


def save_progression_chart(progression: Progression,
                           steps: Sequence[TransformationStep],
                           path: str | Path) -> Path:
    """Plot root motion through a progression, annotated with both actions."""
    fig, ax = plt.subplots(figsize=(1.4 + 1.1 * len(progression), 3.6))
    roots = [int(t.root) for t in progression.triads]
    xs = list(range(len(progression)))
    ax.plot(xs, roots, color="0.75", linewidth=1.0, zorder=1)
    for x, (triad, root) in enumerate(zip(progression.triads, roots)):
        filled = "tab:blue" if triad.is_major else "white"
        ax.scatter([x], [root], s=60, facecolor=filled, edgecolor="tab:blue",
                   zorder=2)
        ax.annotate(triad.name(), (x, root), textcoords="offset points",
                    xytext=(0, 10), ha="center", fontsize=9)
    for i, step in enumerate(steps):
        label = f"{step.ti} / {step.plr}"
        mid = (xs[i] + xs[i + 1]) / 2
        ax.annotate(label, (mid, (roots[i] + roots[i + 1]) / 2),
                    textcoords="offset points", xytext=(0, -14),
                    ha="center", fontsize=7, color="0.3")
    ax.set_yticks(range(12))
    ax.set_yticklabels(PITCH_NAMES)
    ax.set_xticks(xs)
    ax.set_xticklabels([str(i + 1) for i in xs])
    ax.set_xlabel("chord")
    ax.set_ylabel("root")
    title = progression.source or "progression"
    ax.set_title(f"root motion: {title}", fontsize=10)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def save_parsimony_chart(rows: Sequence[ParsimonyRow], path: str | Path) -> Path:
    """Bar chart of worst-voice displacement per trichord class."""
    fig, ax = plt.subplots(figsize=(7.2, 0.42 * len(rows) + 1.4))
    labels = ["<{},{},{}>".format(*r.class_rep) for r in rows]
    maxes = [r.max_disp for r in rows]
    sums = [r.sum_disp for r in rows]
    ys = list(range(len(rows)))[::-1]
    colors = []
    for r in rows:
        if r.excluded:
            colors.append("0.8")
        elif r.max_disp == min(x.max_disp for x in rows if not x.excluded):
            colors.append("tab:green")
        else:
            colors.append("tab:blue")
    ax.barh(ys, maxes, height=0.55, color=colors, label="max displacement")
    for y, total, r in zip(ys, sums, rows):
        note = " (excluded)" if r.excluded else ""
        ax.annotate(f"sum {total}{note}", (r.max_disp + 0.08, y),
                    va="center", fontsize=8, color="0.25")
    ax.set_yticks(ys)
    ax.set_yticklabels(labels, fontfamily="monospace", fontsize=9)
    ax.set_xlabel("largest single-voice move (semitones)")
    ax.set_title("voice-leading parsimony of contextual inversions", fontsize=10)
    ax.set_xlim(0, max(maxes) + 1.6)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
