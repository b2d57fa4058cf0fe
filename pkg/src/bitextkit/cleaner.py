"""Language-identification-based noise removal for parallel corpora.

Three modes are supported: ``per_side`` classifies each side independently
and removes pairs whose sides disagree with their claimed languages or
collapse to a single language; ``concat`` classifies the concatenation of
the two sides and removes pairs it assigns to neither claimed language;
``both`` (the default) applies the concatenation check first and the
per-side checks after it. Pairs with a whitespace-only side are always
removed first. Every decision is tallied into an auditable report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .corpus_io import SentencePair
from .exceptions import IndexMismatch, UnknownLanguage
from .langid import LangIdModel, boundary_evidence, evidence, normalize_text
from .parallel import parallel_map

MODES = ("per_side", "concat", "both")


class Reason(str, Enum):
    KEPT = "Kept"
    SAME_LANGUAGE = "SameLanguagePredicted"
    SOURCE_MISMATCH = "SourceLangMismatch"
    TARGET_MISMATCH = "TargetLangMismatch"
    CONCAT_MISMATCH = "ConcatLangMismatch"
    EMPTY_SIDE = "EmptySide"


@dataclass(frozen=True)
class CleaningDecision:
    index: int
    keep: bool
    reason: Reason
    predicted_source: Optional[str] = None
    predicted_target: Optional[str] = None
    predicted_concat: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "keep": self.keep,
            "reason": self.reason.value,
            "predicted_source": self.predicted_source,
            "predicted_target": self.predicted_target,
            "predicted_concat": self.predicted_concat,
        }


@dataclass
class CleaningReport:
    total: int
    kept: int
    removed_by_reason: dict
    decisions: Optional[list] = field(default=None)

    def to_dict(self, include_decisions: bool = False) -> dict:
        payload = {
            "total": self.total,
            "kept": self.kept,
            "removed_by_reason": dict(self.removed_by_reason),
        }
        if include_decisions and self.decisions is not None:
            payload["decisions"] = [d.to_dict() for d in self.decisions]
        return payload


@dataclass
class CleanResult:
    kept: list
    report: CleaningReport


# worker-process state for parallel cleaning
_WORKER_MODEL: Optional[LangIdModel] = None
_WORKER_MODE: str = "both"


def _init_worker(model: LangIdModel, mode: str) -> None:
    global _WORKER_MODEL, _WORKER_MODE
    _WORKER_MODEL = model
    _WORKER_MODE = mode


def _decide(pair: SentencePair, model: LangIdModel, mode: str) -> CleaningDecision:
    if not pair.source.strip() or not pair.target.strip():
        return CleaningDecision(pair.index, False, Reason.EMPTY_SIDE)

    # The concatenation's n-gram counts are exactly the per-side counts plus
    # the grams straddling the joining space, so one extraction per side
    # serves both the concat and the per-side checks.
    src_norm = normalize_text(pair.source)
    tgt_norm = normalize_text(pair.target)
    languages = model.languages
    ev_src = evidence(model, src_norm)
    ev_tgt = evidence(model, tgt_norm)

    claimed = {pair.src_lang, pair.tgt_lang}
    predicted_concat = None
    if mode in ("concat", "both"):
        concat_scores = model.log_prior.copy()
        for part in (ev_src, ev_tgt, boundary_evidence(model, src_norm, tgt_norm)):
            if part is not None:
                concat_scores = concat_scores + part
        predicted_concat = languages[int(np.argmax(concat_scores))]
        if predicted_concat not in claimed:
            return CleaningDecision(
                pair.index, False, Reason.CONCAT_MISMATCH, predicted_concat=predicted_concat
            )
        if mode == "concat":
            return CleaningDecision(
                pair.index, True, Reason.KEPT, predicted_concat=predicted_concat
            )

    prior = model.log_prior
    predicted_source = languages[int(np.argmax(prior if ev_src is None else prior + ev_src))]
    predicted_target = languages[int(np.argmax(prior if ev_tgt is None else prior + ev_tgt))]
    if predicted_source == predicted_target:
        reason = Reason.SAME_LANGUAGE
    elif predicted_source != pair.src_lang:
        reason = Reason.SOURCE_MISMATCH
    elif predicted_target != pair.tgt_lang:
        reason = Reason.TARGET_MISMATCH
    else:
        reason = Reason.KEPT
    return CleaningDecision(
        pair.index,
        reason is Reason.KEPT,
        reason,
        predicted_source=predicted_source,
        predicted_target=predicted_target,
        predicted_concat=predicted_concat,
    )


def _decide_in_worker(pair: SentencePair) -> CleaningDecision:
    return _decide(pair, _WORKER_MODEL, _WORKER_MODE)


def clean(
    pairs: Iterable[SentencePair],
    model: LangIdModel,
    mode: str = "both",
    workers: int = 1,
    keep_decisions: bool = False,
) -> CleanResult:
    """Filter a corpus, returning kept pairs (input order) and a report.

    Raises UnknownLanguage when a pair claims a language the model does not
    cover, and ValueError when a pair claims the same language twice.
    Decisions are pure per pair, so any ``workers`` count yields identical
    output.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    pairs = list(pairs)
    known = set(model.languages)
    for pair in pairs:
        if pair.src_lang == pair.tgt_lang:
            raise ValueError(f"pair {pair.index}: src_lang equals tgt_lang ({pair.src_lang!r})")
        for code in (pair.src_lang, pair.tgt_lang):
            if code not in known:
                raise UnknownLanguage(code, model.languages)

    decisions = parallel_map(
        _decide_in_worker,
        pairs,
        workers=workers,
        initializer=_init_worker,
        initargs=(model, mode),
    )

    kept = []
    tally: dict = {}
    for pair, decision in zip(pairs, decisions):
        if decision.keep:
            kept.append(pair)
        else:
            tally[decision.reason.value] = tally.get(decision.reason.value, 0) + 1
    report = CleaningReport(
        total=len(pairs),
        kept=len(kept),
        removed_by_reason=tally,
        decisions=list(decisions) if keep_decisions else None,
    )
    return CleanResult(kept=kept, report=report)


def _render_predicted(decision: CleaningDecision) -> str:
    parts = []
    if decision.predicted_concat is not None:
        parts.append(decision.predicted_concat)
    if decision.predicted_source is not None or decision.predicted_target is not None:
        parts.append(f"{decision.predicted_source or '-'}/{decision.predicted_target or '-'}")
    return " ".join(parts) if parts else "-"


def audit_table(
    decisions: Sequence[CleaningDecision],
    pairs: Sequence[SentencePair],
    fmt: str = "tsv",
) -> str:
    """Render removed pairs as a claimed-vs-predicted audit table.

    One row per removed pair, in index order: the pair text, the claimed
    codes, the languages the classifier saw, and the removal reason.
    """
    if fmt not in ("tsv", "text"):
        raise ValueError(f"fmt must be 'tsv' or 'text', got {fmt!r}")
    if len(decisions) != len(pairs):
        raise IndexMismatch(f"{len(decisions)} decisions for {len(pairs)} pairs")
    for decision, pair in zip(decisions, pairs):
        if decision.index != pair.index:
            raise IndexMismatch(f"decision index {decision.index} does not match pair {pair.index}")

    header = ("index", "source", "target", "claimed", "predicted", "reason")
    rows = [
        (
            str(pair.index),
            pair.source,
            pair.target,
            f"{pair.src_lang}-{pair.tgt_lang}",
            _render_predicted(decision),
            decision.reason.value,
        )
        for decision, pair in zip(decisions, pairs)
        if not decision.keep
    ]
    if fmt == "tsv":
        lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
        return "\n".join(lines)
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i]) for i in range(6)]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(6))]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(6)))
    return "\n".join(lines)
