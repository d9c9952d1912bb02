"""Survey report: delimited output plus figures rendered to files.

write_survey_report walks every realizable odd count up to a limit,
writes one CSV row per hit with its certificate, and renders two charts:
how the density of realizable odd numbers falls off by dyadic range, and
how many field factors the canonical witnesses use.
"""

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import realize
from .errors import DomainError


def realizable_odd_values(limit):
    """Every odd k <= limit that is a product of numbers 2**n - 1."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        n = 2
        while True:
            w = v * ((1 << n) - 1)
            if w > limit:
                break
            if w not in seen:
                seen.add(w)
                frontier.append(w)
            n += 1
    return sorted(seen)


def _witness_label(exponents):
    if not exponents:
        return "GF(2)"
    return " x ".join(f"GF(2^{n})" for n in exponents)


def _density_figure(values, limit, path):
    bins = []
    fractions = []
    top = limit.bit_length()
    marks = set(values)
    for i in range(1, top + 1):
        lo, hi = 1 << (i - 1), min((1 << i) - 1, limit)
        if lo > limit:
            break
        odds = [k for k in range(lo | 1, hi + 1, 2)]
        if not odds:
            continue
        hits = sum(1 for k in odds if k in marks)
        bins.append(i - 1)
        fractions.append(hits / len(odds))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(bins, fractions, color="#33658a")
    ax.set_xlabel("dyadic range [2^i, 2^(i+1))")
    ax.set_ylabel("fraction of odd k realizable")
    ax.set_title(f"Realizable odd unit counts up to {limit}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _certificate_figure(certificates, path):
    sizes = [len(c) for c in certificates]
    top = max(sizes) if sizes else 0
    counts = [sizes.count(s) for s in range(top + 1)]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(top + 1), counts, color="#86bbd8")
    ax.set_xlabel("number of field factors in the witness")
    ax.set_ylabel("realizable odd counts")
    ax.set_title("Certificate sizes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_survey_report(limit, outdir):
    """Write survey.csv and two PNG figures under outdir; return a summary."""
    os.makedirs(outdir, exist_ok=True)
    values = realizable_odd_values(limit)
    certificates = []
    csv_path = os.path.join(outdir, "survey.csv")
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "certificate_exponents", "witness"])
        for k in values:
            exponents = realize.odd_product_decomposition(k)
            certificates.append(exponents)
            writer.writerow(
                [k, " ".join(map(str, exponents)), _witness_label(exponents)]
            )
    density_path = os.path.join(outdir, "odd_density.png")
    sizes_path = os.path.join(outdir, "certificate_sizes.png")
    _density_figure(values, limit, density_path)
    _certificate_figure(certificates, sizes_path)
    odd_total = (limit + 1) // 2
    return {
        "limit": limit,
        "realizable_odd": len(values),
        "odd_considered": odd_total,
        "csv": csv_path,
        "figures": [density_path, sizes_path],
    }
