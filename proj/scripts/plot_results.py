#!/usr/bin/env python3
"""Plot experiment summaries written by `gmed experiment`.

usage: plot_results.py results/bounds_reals [results/rotations ...] --out plots/
"""
import argparse
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def read_csv(prefix: Path) -> pd.DataFrame:
    # First line is the schema marker.
    return pd.read_csv(prefix.with_suffix(".csv"), skiprows=1, na_values=["NA", "inapplicable"])


def plot_trials(prefix: Path, out: Path) -> None:
    summary = json.loads(prefix.with_suffix(".summary.json").read_text())
    rows = summary["groups"]
    fig, ax = plt.subplots(figsize=(6, 4))
    for dist in sorted({r["outlier_distance"] for r in rows}):
        group = sorted((r for r in rows if r["outlier_distance"] == dist), key=lambda r: r["k"])
        ks = [r["k"] for r in group]
        for col, style in [("observed_displacement", "-"), ("bound_thm1", ":"), ("bound_thm2", "--"),
                           ("bound_thm3", "-."), ("mean_displacement", "-")]:
            stats = [r.get(col) for r in group]
            means = [s["mean"] if s and s.get("mean") is not None else float("nan") for s in stats]
            if all(m != m for m in means):
                continue
            ax.plot(ks, means, style, label=f"{col} (D={dist:g})")
    ax.set_xlabel("k")
    ax.set_ylabel("distance")
    ax.set_yscale("symlog", linthresh=1e-3)
    ax.set_title(f"{summary['experiment']} ({summary['space']}, {summary['mode']})")
    ax.legend(fontsize=6)
    fig.tight_layout()
    fig.savefig(out / f"{prefix.name}.png", dpi=150)
    plt.close(fig)


def plot_tightness(prefix: Path, out: Path) -> None:
    df = read_csv(prefix)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(df["n2"], df["ratio"], label="bound / actual")
    ax.axhline(1.0, color="gray", lw=0.5)
    ax.set_xlabel("n2")
    ax.set_ylabel("ratio")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / f"{prefix.name}.png", dpi=150)
    plt.close(fig)


def plot_pull(prefix: Path, out: Path) -> None:
    df = read_csv(prefix)
    fig, ax = plt.subplots(figsize=(6, 4))
    for (p, n), g in df.groupby(["p", "n"]):
        ax.loglog(g["d"], g["empirical"], "o", label=f"p={p} n={n}")
        ax.loglog(g["d"], g["predicted"], "-", color="gray", lw=0.5)
    ax.set_xlabel("outlier distance d")
    ax.set_ylabel("pull on the median")
    ax.legend(fontsize=6)
    fig.tight_layout()
    fig.savefig(out / f"{prefix.name}.png", dpi=150)
    plt.close(fig)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("prefixes", nargs="+", type=Path, help="output prefix given in the config")
    parser.add_argument("--out", type=Path, default=Path("plots"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for prefix in args.prefixes:
        schema = prefix.with_suffix(".csv").open().readline().strip()
        if schema == "#schema=gmed.trials.v1":
            plot_trials(prefix, args.out)
        elif schema == "#schema=gmed.tightness.v1":
            plot_tightness(prefix, args.out)
        elif schema == "#schema=gmed.nonmetric_pull.v1":
            plot_pull(prefix, args.out)
        else:
            raise SystemExit(f"{prefix}: unknown schema {schema!r}")


if __name__ == "__main__":
    main()
