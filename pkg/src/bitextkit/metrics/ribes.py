"""Rank-based word-order score (RIBES).

Each hypothesis word is aligned to a reference position: a word unique to
both sides aligns directly; an ambiguous word is disambiguated by growing a
one-word context window left and right until the n-gram is unique in both
sides; anything still ambiguous stays unaligned. The normalized Kendall's
tau over the aligned reference ranks (read in hypothesis order) is scaled
by unigram precision**alpha and brevity penalty**beta. The score against
multiple references is the maximum over references.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..exceptions import EmptyCorpus, LineCountMismatch

DEFAULT_ALPHA = 0.25
DEFAULT_BETA = 0.10

Tokens = Sequence[str]


@dataclass(frozen=True)
class RibesScore:
    ribes: float
    nkt: float
    unigram_precision: float
    bp: float
    alpha: float
    beta: float

    def to_dict(self) -> dict:
        return {
            "ribes": self.ribes,
            "nkt": self.nkt,
            "unigram_precision": self.unigram_precision,
            "bp": self.bp,
            "alpha": self.alpha,
            "beta": self.beta,
        }


def _occurrences(seq: Tokens, gram: tuple) -> list[int]:
    """Start positions of (possibly overlapping) occurrences of gram in seq."""
    n = len(gram)
    return [i for i in range(len(seq) - n + 1) if tuple(seq[i : i + n]) == gram]


def word_alignment(ref: Tokens, hyp: Tokens) -> list[int]:
    """Reference positions of aligned hypothesis words, in hypothesis order."""
    ref = list(ref)
    hyp = list(hyp)
    aligned: list[int] = []
    for i, word in enumerate(hyp):
        ref_count = ref.count(word)
        if ref_count == 0:
            continue
        if ref_count == 1 and hyp.count(word) == 1:
            aligned.append(ref.index(word))
            continue
        for window in range(1, max(i + 1, len(hyp) - i)):
            if window <= i:
                gram = tuple(hyp[i - window : i + 1])
                in_ref = _occurrences(ref, gram)
                if len(in_ref) == 1 and len(_occurrences(hyp, gram)) == 1:
                    aligned.append(in_ref[0] + window)
                    break
            if i + window < len(hyp):
                gram = tuple(hyp[i : i + window + 1])
                in_ref = _occurrences(ref, gram)
                if len(in_ref) == 1 and len(_occurrences(hyp, gram)) == 1:
                    aligned.append(in_ref[0])
                    break
    return aligned


def normalized_kendall_tau(positions: Sequence[int]) -> float:
    """Fraction of strictly ascending pairs; 0.0 with fewer than 2 positions."""
    n = len(positions)
    if n < 2:
        return 0.0
    ascending = sum(
        1 for i in range(n - 1) for j in range(i + 1, n) if positions[i] < positions[j]
    )
    return ascending / (n * (n - 1) / 2)


def _single_ref(hyp: Tokens, ref: Tokens, alpha: float, beta: float) -> RibesScore:
    if len(hyp) == 0:
        return RibesScore(0.0, 0.0, 0.0, 0.0, alpha, beta)
    bp = min(1.0, math.exp(1.0 - len(ref) / len(hyp)))
    positions = word_alignment(ref, hyp)
    nkt = normalized_kendall_tau(positions)
    precision = len(positions) / len(hyp)
    return RibesScore(nkt * precision**alpha * bp**beta, nkt, precision, bp, alpha, beta)


def ribes(
    hyp: Tokens,
    refs: Sequence[Tokens],
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
) -> RibesScore:
    """Sentence RIBES against one or more references (maximum over refs)."""
    if not refs:
        raise ValueError("at least one reference is required")
    best = None
    for ref in refs:
        score = _single_ref(hyp, ref, alpha, beta)
        if best is None or score.ribes > best.ribes:
            best = score
    return best


def ribes_corpus(
    hypotheses: Sequence[Tokens],
    references: Sequence[Sequence[Tokens]],
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
) -> RibesScore:
    """Corpus RIBES: the mean over segments of the per-segment best score.

    The nkt / precision / bp fields of the result are the corresponding
    per-segment means, reported for diagnostics.
    """
    if len(hypotheses) != len(references):
        raise LineCountMismatch(len(hypotheses), len(references), context="hypotheses / references")
    if not hypotheses:
        raise EmptyCorpus("cannot score an empty corpus")
    scores = [ribes(h, r, alpha, beta) for h, r in zip(hypotheses, references)]
    n = len(scores)
    return RibesScore(
        ribes=sum(s.ribes for s in scores) / n,
        nkt=sum(s.nkt for s in scores) / n,
        unigram_precision=sum(s.unigram_precision for s in scores) / n,
        bp=sum(s.bp for s in scores) / n,
        alpha=alpha,
        beta=beta,
    )
