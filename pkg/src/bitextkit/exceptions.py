"""Exception types shared across the toolkit."""


class BitextError(Exception):
    """Base class for all toolkit errors."""


class LineCountMismatch(BitextError):
    """Two line-aligned files (or streams) have different lengths."""

    def __init__(self, first_count: int, second_count: int, context: str = ""):
        self.first_count = first_count
        self.second_count = second_count
        msg = f"line counts differ: {first_count} vs {second_count}"
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)


class EncodingError(BitextError):
    """A file is not valid UTF-8; reports the byte offset of the bad data."""

    def __init__(self, path, byte_offset: int, detail: str = ""):
        self.path = path
        self.byte_offset = byte_offset
        msg = f"{path}: invalid UTF-8 at byte offset {byte_offset}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class MalformedRow(BitextError):
    """A TSV row does not contain exactly one TAB separator."""

    def __init__(self, index: int, tab_count: int = -1):
        self.index = index
        self.tab_count = tab_count
        detail = "" if tab_count < 0 else f" ({tab_count} tabs)"
        super().__init__(f"malformed row at line index {index}{detail}")


class InsufficientLanguages(BitextError):
    """Language-identifier training needs at least two languages."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"need at least 2 languages to train, got {count}")


class EmptySeed(BitextError):
    """A language's training seed contains no non-empty line."""

    def __init__(self, lang: str):
        self.lang = lang
        super().__init__(f"seed corpus for language {lang!r} has no non-empty lines")


class VersionMismatch(BitextError):
    """A model file carries an unsupported format version."""

    def __init__(self, found: int, supported: int):
        self.found = found
        self.supported = supported
        super().__init__(f"unsupported model format version {found} (supported: {supported})")


class ModelFormatError(BitextError):
    """A model file is corrupt or truncated; reports the failing byte offset."""

    def __init__(self, offset: int, detail: str):
        self.offset = offset
        super().__init__(f"corrupt model file at byte offset {offset}: {detail}")


class UnknownLanguage(BitextError):
    """A claimed language code is not covered by the classifier model."""

    def __init__(self, lang: str, known):
        self.lang = lang
        self.known = list(known)
        super().__init__(f"language {lang!r} not in model languages {self.known}")


class IndexMismatch(BitextError):
    """Two parallel sequences disagree on indices or lengths."""


class EmptyCorpus(BitextError):
    """An operation that needs at least one segment got an empty corpus."""
