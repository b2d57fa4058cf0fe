"""Translation edit rate with the standard greedy block-shift heuristic.

The hypothesis is repeatedly rewritten by moving one contiguous span (at
most ``max_shift_size`` words) to a position where it matches the
reference, choosing at each step the shift that most reduces the word-level
edit distance and stopping when no shift reduces it further. Each shift
costs one edit; the remaining insertions, deletions, and substitutions come
from a final dynamic-programming pass. With several references, the
reference yielding the fewest edits is used while the denominator is the
average reference length, so the rate can exceed 1 (or 100 when rendered
as a percentage).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exceptions import EmptyCorpus, LineCountMismatch

DEFAULT_MAX_SHIFT_SIZE = 10

Tokens = Sequence[str]


@dataclass(frozen=True)
class EditCounts:
    insertions: int
    deletions: int
    substitutions: int
    shifts: int

    @property
    def total(self) -> int:
        return self.insertions + self.deletions + self.substitutions + self.shifts

    def to_dict(self) -> dict:
        return {
            "ins": self.insertions,
            "del": self.deletions,
            "sub": self.substitutions,
            "shift": self.shifts,
        }


@dataclass(frozen=True)
class TerScore:
    ter: float
    edits: EditCounts
    ref_len: float

    def to_dict(self) -> dict:
        return {"ter": self.ter, "edits": self.edits.to_dict(), "ref_len": self.ref_len}


def _edit_distance(hyp: Tokens, ref: Tokens) -> int:
    """Word-level Levenshtein distance (single-row DP)."""
    if hyp == ref:
        return 0
    prev = list(range(len(ref) + 1))
    for i, h in enumerate(hyp, start=1):
        cur = [i] + [0] * len(ref)
        for j, r in enumerate(ref, start=1):
            cur[j] = min(prev[j - 1] + (h != r), prev[j] + 1, cur[j - 1] + 1)
        prev = cur
    return prev[-1]


def _edit_breakdown(hyp: Tokens, ref: Tokens) -> tuple[int, int, int]:
    """(insertions, deletions, substitutions) from a full DP backtrace.

    Ties prefer the diagonal, then deleting from the hypothesis, then
    inserting, which keeps the breakdown deterministic.
    """
    n, m = len(hyp), len(ref)
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dist[i][0] = i
    for j in range(m + 1):
        dist[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            dist[i][j] = min(
                dist[i - 1][j - 1] + (hyp[i - 1] != ref[j - 1]),
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
            )
    ins = dels = subs = 0
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dist[i][j] == dist[i - 1][j - 1] + (hyp[i - 1] != ref[j - 1]):
            if hyp[i - 1] != ref[j - 1]:
                subs += 1
            i, j = i - 1, j - 1
        elif i > 0 and dist[i][j] == dist[i - 1][j] + 1:
            dels += 1
            i -= 1
        else:
            ins += 1
            j -= 1
    return ins, dels, subs


def _span_positions(ref: Tokens, span: Tokens) -> list[int]:
    n = len(span)
    return [k for k in range(len(ref) - n + 1) if list(ref[k : k + n]) == list(span)]


def _best_shift(hyp: list, ref: Tokens, max_shift_size: int) -> tuple[int, list] | None:
    """The candidate rearrangement with the lowest edit distance, or None."""
    best_dist = None
    best_hyp = None
    seen: set[tuple] = {tuple(hyp)}
    for start in range(len(hyp)):
        for size in range(1, min(max_shift_size, len(hyp) - start) + 1):
            span = hyp[start : start + size]
            if not _span_positions(ref, span):
                continue
            remainder = hyp[:start] + hyp[start + size :]
            for k in _span_positions(ref, span):
                dest = min(k, len(remainder))
                candidate = remainder[:dest] + span + remainder[dest:]
                key = tuple(candidate)
                if key in seen:
                    continue
                seen.add(key)
                dist = _edit_distance(candidate, ref)
                if best_dist is None or dist < best_dist:
                    best_dist = dist
                    best_hyp = candidate
    if best_hyp is None:
        return None
    return best_dist, best_hyp


def _edits_against(hyp: Tokens, ref: Tokens, shifts: bool, max_shift_size: int) -> EditCounts:
    current = list(hyp)
    n_shifts = 0
    if shifts:
        current_dist = _edit_distance(current, ref)
        while current_dist > 0:
            found = _best_shift(current, ref, max_shift_size)
            if found is None or found[0] >= current_dist:
                break
            current_dist, current = found
            n_shifts += 1
    ins, dels, subs = _edit_breakdown(current, ref)
    return EditCounts(ins, dels, subs, n_shifts)


def ter(
    hyp: Tokens,
    refs: Sequence[Tokens],
    shifts: bool = True,
    max_shift_size: int = DEFAULT_MAX_SHIFT_SIZE,
) -> TerScore:
    """Sentence TER: fewest edits over the references, divided by the
    average reference length.

    An empty reference set average (all references empty) scores 0.0 when
    the hypothesis is also empty and uses a denominator of 1 otherwise.
    """
    if not refs:
        raise ValueError("at least one reference is required")
    best = None
    for ref in refs:
        counts = _edits_against(hyp, ref, shifts, max_shift_size)
        if best is None or counts.total < best.total:
            best = counts
    ref_len = sum(len(r) for r in refs) / len(refs)
    return TerScore(best.total / (ref_len if ref_len > 0 else 1.0), best, ref_len)


def ter_corpus(
    hypotheses: Sequence[Tokens],
    references: Sequence[Sequence[Tokens]],
    shifts: bool = True,
    max_shift_size: int = DEFAULT_MAX_SHIFT_SIZE,
) -> TerScore:
    """Corpus TER: summed edits over summed average reference lengths."""
    if len(hypotheses) != len(references):
        raise LineCountMismatch(len(hypotheses), len(references), context="hypotheses / references")
    if not hypotheses:
        raise EmptyCorpus("cannot score an empty corpus")
    ins = dels = subs = n_shifts = 0
    ref_len = 0.0
    for hyp, refs in zip(hypotheses, references):
        segment = ter(hyp, refs, shifts=shifts, max_shift_size=max_shift_size)
        ins += segment.edits.insertions
        dels += segment.edits.deletions
        subs += segment.edits.substitutions
        n_shifts += segment.edits.shifts
        ref_len += segment.ref_len
    counts = EditCounts(ins, dels, subs, n_shifts)
    return TerScore(counts.total / (ref_len if ref_len > 0 else 1.0), counts, ref_len)
