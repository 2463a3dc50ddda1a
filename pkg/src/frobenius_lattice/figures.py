"""Matplotlib summaries of an audit report, written to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .audit import EXCEPTIONAL_CASES, AuditReport  # noqa: E402


def plot_audit_summary(report: AuditReport, path, dpi: int = 120):
    """Stacked bars of agreeing vs. disagreeing records per case, plus a scatter of the gap."""
    totals = report.totals
    agreeing = dict.fromkeys(EXCEPTIONAL_CASES, 0)
    for rec in report.records:
        agreeing[rec.case] += rec.agree
    labels = EXCEPTIONAL_CASES
    ok = [agreeing[k] for k in labels]
    bad = [totals[k] - agreeing[k] for k in labels]

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4.2))
    xs = range(len(labels))
    ax0.bar(xs, ok, color="tab:green", label="agree")
    ax0.bar(xs, bad, bottom=ok, color="tab:red", label="disagree")
    ax0.set_xticks(list(xs))
    ax0.set_xticklabels(labels, rotation=25, ha="right", fontsize=8)
    ax0.set_ylabel("records")
    ax0.set_title(f"closed form vs oracle, a<={report.a_max}, b<={report.b_max}")
    ax0.legend(frameon=False)

    wrong = report.disagreements()
    if wrong:
        ax1.scatter(
            [r.g_oracle for r in wrong], [r.g_formula - r.g_oracle for r in wrong], s=4, color="tab:red"
        )
    ax1.set_xlabel("oracle g(a,b,c)")
    ax1.set_ylabel("formula - oracle")
    ax1.set_title(f"{len(wrong)} disagreements")
    ax1.axhline(0, color="0.6", lw=0.8)

    fig.tight_layout()
    fig.savefig(path, dpi=dpi, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
    return path
