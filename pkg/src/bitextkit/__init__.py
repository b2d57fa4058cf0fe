"""bitextkit: parallel-corpus cleaning and MT evaluation toolkit.

Library surface: corpus I/O and statistics (:mod:`bitextkit.corpus_io`),
a trainable character-n-gram language identifier (:mod:`bitextkit.langid`),
langid-based bitext cleaning (:mod:`bitextkit.cleaner`), a Moses-convention
tokenizer/detokenizer (:mod:`bitextkit.tokenizer`), BLEU/RIBES/TER scoring
(:mod:`bitextkit.metrics`), and Levenshtein-based cognate analysis
(:mod:`bitextkit.cognates`). The ``bitextkit`` executable exposes each
stage as a subcommand.
"""

__version__ = "0.1.0"

from .corpus_io import (  # noqa: E402
    CorpusStats,
    SentencePair,
    corpus_stats,
    read_parallel,
    read_tsv,
    write_parallel,
    write_tsv,
)

__all__ = [
    "CorpusStats",
    "SentencePair",
    "__version__",
    "corpus_stats",
    "read_parallel",
    "read_tsv",
    "write_parallel",
    "write_tsv",
]
