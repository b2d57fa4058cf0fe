"""
Moses-convention tokenization and detokenization
================================================

Punctuation splits off, nonbreaking prefixes keep their period, decimals
and thousands survive, multi-dots stay together, and apostrophes follow
the language: Catalan/French clitics attach left, English contractions
attach right, Spanish/Portuguese isolate. A language without bundled
rules borrows the rules of the language it is paired with (the
Bambara-French case).
"""

from bitextkit.tokenizer import detokenize, resolve_rules, tokenize

samples = [
    ("es", "El Sr. García pagó 1.250,50 euros... ¡increíble!"),
    ("ca", "L'alcaldessa va inaugurar l'exposició del Dr. Puig."),
    ("pt", "A Sra. Costa chegou às 15h30, como sempre."),
    ("fr", "C'est l'œuvre d'un artiste, n'est-ce pas?"),
    ("en", "Dr. Smith doesn't like the U.S. weather, does he?"),
]

for lang, text in samples:
    rules = resolve_rules(lang)
    tokens = tokenize(text, rules)
    back = detokenize(tokens, rules)
    print(f"[{lang}] {text}")
    print("   ->", " ".join(tokens))
    print("   <-", back, "(round-trip OK)" if back == text else "(changed)")
    print()

# Bambara has no rules of its own: it resolves to its pair language
bm_rules = resolve_rules("bm", "fr")
print("bm paired with fr resolves to:", bm_rules.lang)
print("   ->", " ".join(tokenize("C'est l'agent de santé villageois.", bm_rules)))
