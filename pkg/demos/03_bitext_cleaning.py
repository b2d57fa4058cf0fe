"""
Removing noisy pairs from a bitext
==================================

Open parallel corpora contain pairs whose target is a copy of the source,
or text in the wrong language altogether. The cleaner classifies the
concatenation of both sides and each side separately, removes offenders,
and reports every decision so the removals can be audited.
"""

from importlib import resources

from bitextkit import SentencePair
from bitextkit.cleaner import audit_table, clean
from bitextkit.langid import train

seeds = {
    lang: resources.files("bitextkit").joinpath(f"data/seeds/{lang}.txt").read_text(encoding="utf-8").splitlines()
    for lang in ("es", "ca", "pt", "fr")
}
model = train(seeds)

pairs = [
    # legitimate translations
    SentencePair(0, "El gobierno anunció nuevas medidas económicas.",
                 "El govern va anunciar noves mesures econòmiques.", "es", "ca"),
    SentencePair(1, "La biblioteca cierra a mediodía los sábados.",
                 "La biblioteca tanca al migdia els dissabtes.", "es", "ca"),
    # noise: target copies the source (both sides detect as Spanish)
    SentencePair(2, "Los precios subieron durante el verano.",
                 "Los precios subieron durante el verano.", "es", "ca"),
    # noise: target is French, not Catalan
    SentencePair(3, "El tren llega a las ocho de la mañana.",
                 "Le train arrive à huit heures du matin.", "es", "ca"),
    # noise: a side is empty after trimming
    SentencePair(4, "Texto sin traducción.", "   ", "es", "ca"),
]

result = clean(pairs, model, mode="both", keep_decisions=True)
print("kept", result.report.kept, "of", result.report.total)
print("removed by reason:", result.report.removed_by_reason)
print()
print(audit_table(result.report.decisions, pairs, fmt="text"))
