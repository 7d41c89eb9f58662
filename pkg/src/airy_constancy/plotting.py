"""Figures written next to the CLI's delimited output.

matplotlib is imported lazily so the rest of the package never needs it.
"""
from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams.update({"font.size": 10, "axes.spines.top": False, "axes.spines.right": False})
    return plt


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    _pyplot().close(fig)


def plot_profile(profile, path, render=None):
    """Staircase of the constant values; ``render`` is an optional (xs, us) overlay."""
    plt = _pyplot()
    q = profile.time.q
    fig, ax = plt.subplots(figsize=(7, 3.2))
    edges = [j / q for j in range(2 * q + 1)]
    ax.stairs(profile.values, edges, baseline=None, color="k", lw=1.5, label="exact")
    if render is not None:
        xs, us = render
        ax.plot(xs, us, lw=0.6, color="tab:red", alpha=0.8, label="partial sum")
        ax.legend(frameon=False, loc="upper left")
    ax.set_xlim(0, 2)
    ax.set_xlabel(r"$x/\pi$")
    ax.set_ylabel("u")
    ax.set_title(rf"$t = \pi \cdot {profile.time.p}/{q}$")
    _save(fig, path)


def plot_comb(comb, path):
    plt = _pyplot()
    q = comb.time.q
    fig, ax = plt.subplots(figsize=(7, 3.2))
    xs = [l / q for l in range(2 * q)]
    ax.stem(xs, comb.betas, basefmt=" ")
    ax.axhline(0, color="0.6", lw=0.5)
    ax.set_xlabel(r"$x/\pi$")
    ax.set_ylabel(r"$\beta_\ell$")
    ax.set_title(rf"fundamental solution at $t = \pi \cdot {comb.time.p}/{q}$")
    _save(fig, path)


def plot_jumps(time, values, exact_zero, path):
    plt = _pyplot()
    q = time.q
    fig, ax = plt.subplots(figsize=(7, 3.2))
    xs = [j / q for j in range(2 * q)]
    colors = ["tab:green" if z else "k" for z in exact_zero]
    ax.vlines(xs, 0, values, colors=colors, lw=1.2)
    ax.scatter(xs, values, c=colors, s=10, zorder=3)
    ax.axhline(0, color="0.6", lw=0.5)
    ax.set_xlabel(r"$x/\pi$")
    ax.set_ylabel("jump")
    ax.set_title(rf"jumps at $t = \pi \cdot {time.p}/{q}$ (green: point of constancy)")
    _save(fig, path)


def plot_render(xs, us, path, title=None):
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 3.2))
    ax.plot(xs, us, lw=0.7, color="k")
    ax.set_xlim(0, 2)
    ax.set_xlabel(r"$x/\pi$")
    ax.set_ylabel("u")
    if title:
        ax.set_title(title)
    _save(fig, path)
