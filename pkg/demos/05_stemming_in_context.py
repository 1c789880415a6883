"""Context-based root selection end to end: the same ambiguous word can
resolve differently depending on what the matrix knows about its context.

Run from the repository root:  python demos/05_stemming_in_context.py
"""

from pathlib import Path

from cbas import (
    AssociationMeasure,
    Stemmer,
    build_matrix,
    bundled_resource_dir,
    iter_token_streams,
    load_resources,
    load_stopwords,
    read_corpus,
)

resources = load_resources(bundled_resource_dir())
stopwords = load_stopwords(bundled_resource_dir() / "stopwords.txt")
documents = read_corpus(Path("data/sample_corpus"))
matrix = build_matrix(iter_token_streams(documents, stopwords), window_n=3)

stemmer = Stemmer(resources, stopwords, matrix, AssociationMeasure("spmi", 0.75))

sentence = "وقال مدرب الفريق إن افتتاح الدورة 23 كان جميلا ."
print("input:", sentence)
print()
for result in stemmer.stem_text(sentence):
    if result.skip_reason:
        print(f"  {result.input:>10}  -> skipped ({result.skip_reason})")
        continue
    table = ", ".join(f"{s.root}:{s.score:.3f}" for _, s in result.scored)
    print(f"  {result.input:>10}  -> {result.root}   [{table}]")

# The word لدار is genuinely ambiguous between two dictionary roots. The
# corpus contains a derivation of دور (the token يدور) but none of دير, so
# even with no scoring signal the in-vocabulary-derivations tie-break
# settles it; with a context word that actually co-occurred with يدور the
# association score itself becomes positive.
for before in (["وصل", "الكتاب"], ["الحديث"]):
    result = stemmer.stem("لدار", before=before)
    print(f"\nلدار after {before} -> {result.root}")
    for cand, scored in result.scored:
        print(f"  candidate {scored.root}: score={scored.score:.4f} derived_in_vocab={scored.derived_in_vocab}")

# Scoring against the whole window instead of only the previous word.
wide = Stemmer(resources, stopwords, matrix, AssociationMeasure("spmi", 0.75), context_mode="window")
result = wide.stem("الدورة", before=["افتتح", "الوزير"], after=["الرياضية"])
print(f"\nالدورة scored against the full window -> {result.root}")
