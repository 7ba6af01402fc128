"""Report rendering: delimited tables with matplotlib figures alongside.

Every figure is paired with the TSV file holding the exact numbers it was
drawn from; the text outputs are byte-deterministic, the PNGs carry fixed
metadata.  matplotlib is imported lazily so the exact-arithmetic paths pay
nothing for it.
"""
from __future__ import annotations

from pathlib import Path

from .aqft import slot_counts
from .cvec import format_scalar

_PNG_META = {"Software": "aqftops"}


def _agg():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def write_counts_report(O, outdir, stem="counts"):
    """Per-arity class counts: TSV plus a bar chart."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    counts = slot_counts(O)
    arities = list(range(max(counts) + 1)) if counts else []
    rows = [(n, counts.get(n, 0)) for n in arities]
    tsv = outdir / f"{stem}.tsv"
    tsv.write_text(
        "arity\tclasses\n" + "".join(f"{n}\t{k}\n" for n, k in rows)
    )
    plt = _agg()
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar([n for n, _ in rows], [k for _, k in rows], color="#33557a")
    ax.set_xlabel("arity")
    ax.set_ylabel("operation classes")
    ax.set_title(O.name)
    ax.set_xticks([n for n, _ in rows])
    fig.tight_layout()
    png = outdir / f"{stem}.png"
    fig.savefig(png, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return [tsv, png]


def write_slot_table(O, outdir, stem="slots"):
    """Per-slot class counts as TSV (profile, target, classes)."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    lines = ["target\tprofile\tclasses\n"]
    for (c, t) in O.seq.supported():
        lines.append(f"{t}\t{','.join(c)}\t{len(O.seq.slot(c, t))}\n")
    tsv = outdir / f"{stem}.tsv"
    tsv.write_text("".join(lines))
    return [tsv]


def write_gram_report(result, labels, outdir, stem="gram"):
    """Gram matrix of a GNS construction: TSV of exact entries plus a
    heatmap of their (floating) magnitudes."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    gram = result.space.gram
    dim = result.space.dim
    lines = ["\t" + "\t".join(labels) + "\n"]
    for i in range(dim):
        lines.append(
            labels[i] + "\t"
            + "\t".join(format_scalar(gram[i][j]) for j in range(dim)) + "\n"
        )
    tsv = outdir / f"{stem}.tsv"
    tsv.write_text("".join(lines))
    plt = _agg()
    mags = [
        [float(abs(complex(z.re, z.im))) for z in row] for row in gram
    ]
    fig, ax = plt.subplots(figsize=(4, 3.6))
    im = ax.imshow(mags, cmap="viridis")
    ax.set_xticks(range(dim), labels, rotation=45)
    ax.set_yticks(range(dim), labels)
    ax.set_title("pairing magnitude")
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    png = outdir / f"{stem}.png"
    fig.savefig(png, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return [tsv, png]
