"""Line-aligned parallel corpus I/O (two-file and TSV formats) and corpus statistics.

The two-file format pairs line i of the source file with line i of the
target file. Files are UTF-8; lines are written LF-terminated. On read,
a trailing CR is stripped so CRLF corpora round-trip to the LF convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .exceptions import EncodingError, LineCountMismatch, MalformedRow

_LINE_BREAKS = ("\n", "\r")


@dataclass(frozen=True)
class SentencePair:
    """One aligned bitext unit with its claimed language codes."""

    index: int
    source: str
    target: str
    src_lang: str
    tgt_lang: str


@dataclass(frozen=True)
class CorpusStats:
    """Sentence/word counts and corpus-global type-token ratios.

    TTR is distinct tokens over total tokens for the whole corpus side;
    it is None when the side has no tokens at all.
    """

    sentence_count: int
    word_count_source: int
    word_count_target: int
    ttr_source: Optional[float]
    ttr_target: Optional[float]

    def to_dict(self) -> dict:
        return {
            "sentence_count": self.sentence_count,
            "word_count_source": self.word_count_source,
            "word_count_target": self.word_count_target,
            "ttr_source": self.ttr_source,
            "ttr_target": self.ttr_target,
        }


def _iter_decoded_lines(path) -> Iterator[str]:
    """Yield lines of a UTF-8 file with the trailing LF (and CR) stripped.

    Decoding is done per line so that an invalid byte can be reported with
    its absolute offset in the file.
    """
    offset = 0
    with open(path, "rb") as fh:
        for raw in fh:
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise EncodingError(path, offset + exc.start, exc.reason) from exc
            offset += len(raw)
            if line.endswith("\n"):
                line = line[:-1]
            if line.endswith("\r"):
                line = line[:-1]
            yield line


def _count_lines(stream: Iterator[str]) -> int:
    return sum(1 for _ in stream)


def read_parallel(source_path, target_path, src_lang: str, tgt_lang: str) -> Iterator[SentencePair]:
    """Stream pairs from two line-aligned files.

    Raises LineCountMismatch (with both totals) when the files disagree in
    length, and EncodingError with a byte offset on invalid UTF-8.
    """
    src_lines = _iter_decoded_lines(source_path)
    tgt_lines = _iter_decoded_lines(target_path)
    index = 0
    while True:
        src = next(src_lines, None)
        tgt = next(tgt_lines, None)
        if src is None and tgt is None:
            return
        if src is None or tgt is None:
            n_src = index + (0 if src is None else 1 + _count_lines(src_lines))
            n_tgt = index + (0 if tgt is None else 1 + _count_lines(tgt_lines))
            raise LineCountMismatch(n_src, n_tgt, context=f"{source_path} / {target_path}")
        yield SentencePair(index, src, tgt, src_lang, tgt_lang)
        index += 1


def read_tsv(path, src_lang: str, tgt_lang: str) -> Iterator[SentencePair]:
    """Stream pairs from a single TSV file (source TAB target per line).

    Raises MalformedRow for a line with zero or more than one TAB.
    """
    for index, line in enumerate(_iter_decoded_lines(path)):
        tabs = line.count("\t")
        if tabs != 1:
            raise MalformedRow(index, tabs)
        source, target = line.split("\t")
        yield SentencePair(index, source, target, src_lang, tgt_lang)


def _check_writable(pair: SentencePair, forbid_tab: bool = False) -> None:
    for side, text in (("source", pair.source), ("target", pair.target)):
        if any(ch in text for ch in _LINE_BREAKS):
            raise ValueError(f"pair {pair.index}: {side} text contains a line break")
        if forbid_tab and "\t" in text:
            raise ValueError(f"pair {pair.index}: {side} text contains a TAB (not representable in TSV)")


def write_parallel(pairs: Iterable[SentencePair], source_path, target_path) -> int:
    """Write pairs to the two-file format. Returns the number of pairs written.

    Line-break characters in either side are rejected: they would silently
    break the alignment, and the read/write round-trip must be lossless.
    """
    count = 0
    try:
        with open(source_path, "w", encoding="utf-8", newline="") as src_fh, open(
            target_path, "w", encoding="utf-8", newline=""
        ) as tgt_fh:
            for pair in pairs:
                _check_writable(pair)
                src_fh.write(pair.source + "\n")
                tgt_fh.write(pair.target + "\n")
                count += 1
    except OSError as exc:
        raise OSError(f"writing parallel corpus to {source_path} / {target_path}: {exc}") from exc
    return count


def write_tsv(pairs: Iterable[SentencePair], path) -> int:
    """Write pairs as TSV (source TAB target). TAB in a field is rejected."""
    count = 0
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            for pair in pairs:
                _check_writable(pair, forbid_tab=True)
                fh.write(pair.source + "\t" + pair.target + "\n")
                count += 1
    except OSError as exc:
        raise OSError(f"writing TSV corpus to {path}: {exc}") from exc
    return count


def corpus_stats(pairs: Iterable[SentencePair], tokenized: bool = False) -> CorpusStats:
    """Count sentences, whitespace-delimited words, and corpus-global TTR.

    Words are maximal runs of non-whitespace. The ``tokenized`` flag records
    whether the input has been tokenized upstream; the splitting rule is the
    same either way, so already-tokenized text is counted token by token.
    """
    del tokenized
    sentences = 0
    total_src = total_tgt = 0
    types_src: set[str] = set()
    types_tgt: set[str] = set()
    for pair in pairs:
        sentences += 1
        src_tokens = pair.source.split()
        tgt_tokens = pair.target.split()
        total_src += len(src_tokens)
        total_tgt += len(tgt_tokens)
        types_src.update(src_tokens)
        types_tgt.update(tgt_tokens)
    return CorpusStats(
        sentence_count=sentences,
        word_count_source=total_src,
        word_count_target=total_tgt,
        ttr_source=(len(types_src) / total_src) if total_src else None,
        ttr_target=(len(types_tgt) / total_tgt) if total_tgt else None,
    )
