"""Combined BLEU + RIBES + TER scoring of hypothesis files."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..corpus_io import _iter_decoded_lines
from ..exceptions import EmptyCorpus, LineCountMismatch
from ..tokenizer import resolve_rules, tokenize
from .bleu import BleuScore, bleu_corpus
from .ribes import DEFAULT_ALPHA, DEFAULT_BETA, RibesScore, ribes_corpus
from .ter import TerScore, ter_corpus


@dataclass(frozen=True)
class MetricReport:
    """All three corpus scores plus their component statistics."""

    bleu: BleuScore
    ribes: RibesScore
    ter: TerScore
    ter_max_shift_size: int = 10

    def to_dict(self) -> dict:
        """Flat JSON-friendly rendering, full precision.

        BLEU's effective reference length is reported as ``ref_len``; TER's
        average reference length keeps its own ``ter_ref_len`` key to avoid
        the collision. The scorer conventions (unsmoothed BLEU, the TER
        shift-span cap) are recorded for auditability.
        """
        edits = self.ter.edits
        return {
            "bleu": self.bleu.bleu,
            "precisions": list(self.bleu.precisions),
            "brevity_penalty": self.bleu.brevity_penalty,
            "hyp_len": self.bleu.hyp_len,
            "ref_len": self.bleu.ref_len,
            "bleu_smoothing": "none",
            "ribes": self.ribes.ribes,
            "nkt": self.ribes.nkt,
            "unigram_precision": self.ribes.unigram_precision,
            "ribes_bp": self.ribes.bp,
            "alpha": self.ribes.alpha,
            "beta": self.ribes.beta,
            "ter": self.ter.ter,
            "edits": edits.to_dict(),
            "ter_ref_len": self.ter.ref_len,
            "ter_max_shift_size": self.ter_max_shift_size,
        }

    def summary(self) -> str:
        """Two-decimal human-readable line."""
        return f"BLEU {self.bleu.bleu:.2f}  RIBES {self.ribes.ribes:.2f}  TER {self.ter.ter:.2f}"


def score_corpus(
    hypotheses: Sequence[Sequence[str]],
    references: Sequence[Sequence[Sequence[str]]],
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
    ter_shifts: bool = True,
    ter_max_shift_size: int = 10,
) -> MetricReport:
    """Score pre-tokenized segments (``references[i]`` is a list of refs)."""
    return MetricReport(
        bleu=bleu_corpus(hypotheses, references),
        ribes=ribes_corpus(hypotheses, references, alpha=alpha, beta=beta),
        ter=ter_corpus(hypotheses, references, shifts=ter_shifts, max_shift_size=ter_max_shift_size),
        ter_max_shift_size=ter_max_shift_size,
    )


def _load_lines(path) -> list:
    return list(_iter_decoded_lines(path))


def score_report(
    hyp_path,
    ref_paths,
    lang: str,
    tokenized_input: bool = False,
    lowercase: bool = False,
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
) -> MetricReport:
    """Score a hypothesis file against one or more line-aligned reference files.

    With ``tokenized_input=False`` (the default), every line is run through
    the rule-based tokenizer for ``lang`` before scoring; otherwise lines
    are split on whitespace as-is. ``lowercase=True`` folds case before
    scoring (scores are case-sensitive by default).
    """
    if isinstance(ref_paths, (str, bytes)) or hasattr(ref_paths, "__fspath__"):
        ref_paths = [ref_paths]
    hyp_lines = _load_lines(hyp_path)
    ref_corpora = []
    for ref_path in ref_paths:
        ref_lines = _load_lines(ref_path)
        if len(ref_lines) != len(hyp_lines):
            raise LineCountMismatch(
                len(hyp_lines), len(ref_lines), context=f"{hyp_path} / {ref_path}"
            )
        ref_corpora.append(ref_lines)
    if not hyp_lines:
        raise EmptyCorpus(f"{hyp_path} is empty")

    if lowercase:
        hyp_lines = [line.lower() for line in hyp_lines]
        ref_corpora = [[line.lower() for line in ref_lines] for ref_lines in ref_corpora]

    if tokenized_input:
        split = str.split
    else:
        rules = resolve_rules(lang)
        split = lambda line: tokenize(line, rules)  # noqa: E731

    hypotheses = [split(line) for line in hyp_lines]
    references = [
        [split(ref_lines[i]) for ref_lines in ref_corpora] for i in range(len(hyp_lines))
    ]
    return score_corpus(hypotheses, references, alpha=alpha, beta=beta)
