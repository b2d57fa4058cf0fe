"""Machine-translation evaluation metrics: BLEU, RIBES, and TER."""

from .bleu import BleuScore, bleu_corpus, bleu_sentence
from .report import MetricReport, score_corpus, score_report
from .ribes import RibesScore, ribes, ribes_corpus
from .ter import EditCounts, TerScore, ter, ter_corpus

__all__ = [
    "BleuScore",
    "EditCounts",
    "MetricReport",
    "RibesScore",
    "TerScore",
    "bleu_corpus",
    "bleu_sentence",
    "ribes",
    "ribes_corpus",
    "score_corpus",
    "score_report",
    "ter",
    "ter_corpus",
]
