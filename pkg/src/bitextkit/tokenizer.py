"""Moses-convention rule-based tokenizer and detokenizer.

Implements the core rule set: punctuation separation, nonbreaking prefixes,
multi-dot preservation, digit-internal punctuation protection, and
per-language apostrophe handling (clitic-attaching for French/Catalan,
contraction-attaching for English, isolating otherwise). Languages without
a bundled prefix list fall back to the rules of the language they are
paired with, and to neutral rules when neither is available.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from importlib import resources

import regex

_ALPHA = r"\p{L}\p{M}"
_NUM = r"\p{N}"
_ALNUM = _ALPHA + _NUM

# Languages whose apostrophe attaches to the preceding clitic ("l' aigua").
_APOS_LEFT_LANGS = frozenset({"fr", "ca", "it", "ga"})
# Languages whose apostrophe attaches to the following contraction ("don 't").
_APOS_RIGHT_LANGS = frozenset({"en"})

_JUNK = regex.compile("[\\x00-\\x1f\\x7f]")
_WS = regex.compile(r"\s+")
_SPECIALS = regex.compile(rf"([^{_ALNUM}\s.'`,\-])")
_AGGRESSIVE_HYPHEN = regex.compile(rf"([{_ALNUM}])-(?=[{_ALNUM}])")
_MULTIDOT = regex.compile(r"\.{2,}")
_MULTIDOT_TOKEN = regex.compile(r"^MULTIDOT(\d+)$")
_COMMA_RULES = (
    (regex.compile(rf"([^{_NUM}]),"), r"\1 , "),
    (regex.compile(rf",([^{_NUM}])"), r" , \1"),
)
_APOS_RULES = {
    "right": (
        (regex.compile(rf"([^{_ALPHA}])'([^{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([^{_ALPHA}{_NUM}])'([{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([{_ALPHA}])'([^{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([{_ALPHA}])'([{_ALPHA}])"), r"\1 '\2"),
        (regex.compile(rf"([{_NUM}])'(s)"), r"\1 '\2"),
    ),
    "left": (
        (regex.compile(rf"([^{_ALPHA}])'([^{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([^{_ALPHA}])'([{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([{_ALPHA}])'([^{_ALPHA}])"), r"\1 ' \2"),
        (regex.compile(rf"([{_ALPHA}])'([{_ALPHA}])"), r"\1' \2"),
    ),
    "isolate": ((regex.compile(r"'"), r" ' "),),
}
_ENDS_WITH_PERIOD = regex.compile(r"^(\S+)\.$")
_HAS_ALPHA = regex.compile(rf"[{_ALPHA}]")
_STARTS_LOWER = regex.compile(r"^\p{Ll}")
_STARTS_DIGIT = regex.compile(rf"^[{_NUM}]")

_PROTECTED_FMT = "THISISPROTECTED{:03d}"
_PROTECTED_TOKEN = regex.compile(r"^THISISPROTECTED(\d{3})$")

_PREFIX_PACKAGE_DIR = "data/nonbreaking_prefixes"


@dataclass(frozen=True)
class TokenizerRules:
    """Per-language tokenization settings."""

    lang: str
    nonbreaking_prefixes: frozenset = frozenset()
    numeric_only_prefixes: frozenset = frozenset()
    aggressive_hyphen: bool = False
    protected_patterns: tuple = ()

    @property
    def apostrophe_class(self) -> str:
        if self.lang in _APOS_LEFT_LANGS:
            return "left"
        if self.lang in _APOS_RIGHT_LANGS:
            return "right"
        return "isolate"


def parse_prefix_file(text: str) -> tuple[frozenset, frozenset]:
    """Parse a Moses ``nonbreaking_prefix.<lang>`` file.

    One prefix per line; lines starting with '#' are comments; a
    ``#NUMERIC_ONLY#`` annotation marks prefixes that keep their period
    only before a number.
    """
    plain = set()
    numeric = set()
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if "#NUMERIC_ONLY#" in line:
            prefix = line.split("#NUMERIC_ONLY#")[0].strip()
            if prefix:
                numeric.add(prefix)
            continue
        if line.startswith("#"):
            continue
        plain.add(line)
    return frozenset(plain), frozenset(numeric)


def _prefix_resource(lang: str):
    return resources.files("bitextkit").joinpath(f"{_PREFIX_PACKAGE_DIR}/nonbreaking_prefix.{lang}")


def supported_languages() -> frozenset:
    """Languages with a bundled nonbreaking-prefix list."""
    prefix_dir = resources.files("bitextkit").joinpath(_PREFIX_PACKAGE_DIR)
    return frozenset(
        entry.name.rsplit(".", 1)[1] for entry in prefix_dir.iterdir() if "nonbreaking_prefix." in entry.name
    )


def _rules_for(lang: str, aggressive_hyphen: bool, protected_patterns: tuple) -> TokenizerRules | None:
    res = _prefix_resource(lang)
    if not res.is_file():
        return None
    plain, numeric = parse_prefix_file(res.read_text(encoding="utf-8"))
    return TokenizerRules(lang, plain, numeric, aggressive_hyphen, tuple(protected_patterns))


def resolve_rules(
    lang: str,
    pair_other_lang: str | None = None,
    aggressive_hyphen: bool = False,
    protected_patterns: tuple = (),
) -> TokenizerRules:
    """Rules for ``lang``, falling back to the paired language's rules when
    ``lang`` is unsupported, and to neutral rules when both are.

    The returned ``lang`` field names the rule set actually resolved, so a
    fallback is observable (e.g. Bambara paired with French resolves to the
    French rules).
    """
    rules = _rules_for(lang.lower(), aggressive_hyphen, protected_patterns)
    if rules is None and pair_other_lang:
        rules = _rules_for(pair_other_lang.lower(), aggressive_hyphen, protected_patterns)
    if rules is None:
        rules = TokenizerRules(
            lang.lower(),
            aggressive_hyphen=aggressive_hyphen,
            protected_patterns=tuple(protected_patterns),
        )
    return rules


def _handle_periods(words: list, rules: TokenizerRules) -> list:
    """Split word-final periods except after nonbreaking prefixes."""
    out = []
    last = len(words) - 1
    for i, word in enumerate(words):
        m = _ENDS_WITH_PERIOD.match(word)
        if m:
            stem = m.group(1)
            keep = (
                ("." in stem and _HAS_ALPHA.search(stem))
                or stem in rules.nonbreaking_prefixes
                or (i < last and _STARTS_LOWER.match(words[i + 1]))
                or (
                    stem in rules.numeric_only_prefixes
                    and i < last
                    and _STARTS_DIGIT.match(words[i + 1])
                )
            )
            if not keep:
                out.append(stem)
                out.append(".")
                continue
        out.append(word)
    return out


def tokenize(text: str, rules: TokenizerRules) -> list:
    """Tokenize one logical line into Moses-convention tokens."""
    text = unicodedata.normalize("NFC", text)
    text = _JUNK.sub("", text)
    text = " " + _WS.sub(" ", text).strip() + " "

    protected: list = []
    if rules.protected_patterns:

        def _stash(m):
            protected.append(m.group(0))
            return " " + _PROTECTED_FMT.format(len(protected) - 1) + " "

        for pattern in rules.protected_patterns:
            text = regex.sub(pattern, _stash, text)

    text = _SPECIALS.sub(r" \1 ", text)
    if rules.aggressive_hyphen:
        text = _AGGRESSIVE_HYPHEN.sub(r"\1 @-@ ", text)
    text = _MULTIDOT.sub(lambda m: f" MULTIDOT{len(m.group(0))} ", text)
    for pattern, repl in _COMMA_RULES:
        text = pattern.sub(repl, text)
    for pattern, repl in _APOS_RULES[rules.apostrophe_class]:
        text = pattern.sub(repl, text)

    tokens = _handle_periods(text.split(), rules)

    restored = []
    for token in tokens:
        m = _MULTIDOT_TOKEN.match(token)
        if m:
            restored.append("." * int(m.group(1)))
            continue
        m = _PROTECTED_TOKEN.match(token)
        if m and int(m.group(1)) < len(protected):
            restored.append(protected[int(m.group(1))])
            continue
        restored.append(token)
    return restored


_RIGHT_PUNCT = regex.compile(r"^[,.?!:;%…\\}\])»›]+$")
_LEFT_PUNCT = regex.compile(r"^[\[({«‹¿¡$]+$")
_EN_CONTRACTION = regex.compile(rf"^'[{_ALPHA}]")
_ENDS_ALNUM = regex.compile(rf"[{_ALNUM}]$")
_CLITIC_END = regex.compile(rf"[{_ALPHA}]'$")
_STARTS_ALPHA = regex.compile(rf"^[{_ALPHA}]")


def detokenize(tokens, rules: TokenizerRules) -> str:
    """Inverse of the Moses conventions: attach closing punctuation to the
    left, opening punctuation to the right, and rebuild apostrophe
    contractions per language. Paired straight quotes alternate between
    opening and closing."""
    apos_class = rules.apostrophe_class
    text = ""
    pending = ""
    quote_parity: dict = {}
    for token in tokens:
        attach_left = False
        no_space_after = False
        if _RIGHT_PUNCT.match(token):
            attach_left = True
        elif _LEFT_PUNCT.match(token):
            no_space_after = True
        elif token == "@-@":
            token = "-"
            attach_left = True
            no_space_after = True
        elif token in ("'", '"'):
            count = quote_parity.get(token, 0)
            quote_parity[token] = count + 1
            if count % 2 == 0:
                no_space_after = True
            else:
                attach_left = True
        elif (
            apos_class == "right"
            and _EN_CONTRACTION.match(token)
            and text
            and _ENDS_ALNUM.search(text)
        ):
            attach_left = True
        if apos_class == "left" and text and _CLITIC_END.search(text) and _STARTS_ALPHA.match(token):
            attach_left = True

        text += token if attach_left else pending + token
        pending = "" if no_space_after else " "
    return text


def tokenize_line(text: str, rules: TokenizerRules) -> str:
    """Tokenize and render as a single space-joined line."""
    return " ".join(tokenize(text, rules))


def neutral_rules(lang: str = "neutral") -> TokenizerRules:
    """Language-neutral rules: no prefixes, isolating apostrophes."""
    return TokenizerRules(lang)


def with_options(rules: TokenizerRules, **changes) -> TokenizerRules:
    """A copy of ``rules`` with the given fields replaced."""
    return replace(rules, **changes)
