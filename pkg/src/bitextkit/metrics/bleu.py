"""Corpus and sentence BLEU with clipped n-gram precisions.

Conventions follow the original corpus definition: clipped counts are summed
over the corpus for n = 1..4, the effective reference length of a segment is
the reference length closest to the hypothesis length (ties go to the
shorter), and the unsmoothed score is 0 whenever any corpus-level precision
is 0.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..exceptions import EmptyCorpus, LineCountMismatch

MAX_ORDER = 4

Tokens = Sequence[str]


@dataclass(frozen=True)
class BleuScore:
    """BLEU in [0, 100] plus its sufficient statistics.

    ``precisions`` are fractions in [0, 1], not percentages.
    """

    bleu: float
    precisions: tuple[float, float, float, float]
    brevity_penalty: float
    hyp_len: int
    ref_len: int

    def to_dict(self) -> dict:
        return {
            "bleu": self.bleu,
            "precisions": list(self.precisions),
            "brevity_penalty": self.brevity_penalty,
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
        }


def _ngram_counts(tokens: Tokens, order: int) -> Counter:
    return Counter(tuple(tokens[i : i + order]) for i in range(len(tokens) - order + 1))


def _closest_ref_len(hyp_len: int, refs: Sequence[Tokens]) -> int:
    best_len = None
    best_diff = None
    for ref in refs:
        ref_len = len(ref)
        diff = abs(hyp_len - ref_len)
        if best_diff is None or diff < best_diff or (diff == best_diff and ref_len < best_len):
            best_diff = diff
            best_len = ref_len
    return best_len


def _segment_stats(hyp: Tokens, refs: Sequence[Tokens], correct: list, total: list) -> None:
    for n in range(1, MAX_ORDER + 1):
        hyp_counts = _ngram_counts(hyp, n)
        if not hyp_counts:
            continue
        max_ref: Counter = Counter()
        for ref in refs:
            for gram, count in _ngram_counts(ref, n).items():
                if count > max_ref[gram]:
                    max_ref[gram] = count
        for gram, count in hyp_counts.items():
            correct[n - 1] += min(count, max_ref.get(gram, 0))
            total[n - 1] += count


def _score_from_stats(
    correct: list,
    total: list,
    hyp_len: int,
    ref_len: int,
    smoothing: str = "none",
) -> BleuScore:
    precisions = []
    for n in range(1, MAX_ORDER + 1):
        c, t = correct[n - 1], total[n - 1]
        p = c / t if t > 0 else 0.0
        if p == 0.0 and smoothing == "add_one_on_zero" and n >= 2:
            p = (c + 1) / (t + 1)
        precisions.append(p)

    if hyp_len == 0:
        bp = 0.0
    elif hyp_len >= ref_len:
        bp = 1.0
    else:
        bp = math.exp(1.0 - ref_len / hyp_len)

    if any(p == 0.0 for p in precisions):
        bleu = 0.0
    else:
        log_mean = sum(math.log(p) for p in precisions) / MAX_ORDER
        bleu = 100.0 * bp * math.exp(log_mean)
    return BleuScore(bleu, tuple(precisions), bp, hyp_len, ref_len)


def bleu_corpus(hypotheses: Sequence[Tokens], references: Sequence[Sequence[Tokens]]) -> BleuScore:
    """Corpus BLEU of tokenized hypotheses against one or more references each.

    ``references[i]`` is the list of reference token lists for hypothesis i.
    Raises EmptyCorpus for a zero-length corpus and LineCountMismatch when
    the hypothesis and reference corpora disagree in length.
    """
    if len(hypotheses) != len(references):
        raise LineCountMismatch(len(hypotheses), len(references), context="hypotheses / references")
    if not hypotheses:
        raise EmptyCorpus("cannot score an empty corpus")

    correct = [0] * MAX_ORDER
    total = [0] * MAX_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp, refs in zip(hypotheses, references):
        if not refs:
            raise ValueError("every segment needs at least one reference")
        hyp_len += len(hyp)
        ref_len += _closest_ref_len(len(hyp), refs)
        _segment_stats(hyp, refs, correct, total)
    return _score_from_stats(correct, total, hyp_len, ref_len)


def bleu_sentence(hyp: Tokens, refs: Sequence[Tokens], smoothing: str = "none") -> BleuScore:
    """Sentence BLEU; with ``smoothing="add_one_on_zero"`` any zero precision
    for n >= 2 becomes (correct+1)/(total+1)."""
    if not refs:
        raise ValueError("at least one reference is required")
    if smoothing not in ("none", "add_one_on_zero"):
        raise ValueError(f"unknown smoothing {smoothing!r}")
    correct = [0] * MAX_ORDER
    total = [0] * MAX_ORDER
    _segment_stats(hyp, refs, correct, total)
    return _score_from_stats(correct, total, len(hyp), _closest_ref_len(len(hyp), refs), smoothing)
