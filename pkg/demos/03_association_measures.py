"""Compare PMI, PPMI, and smoothed PMI on a small fixed count table.

Run from the repository root:  python demos/03_association_measures.py
"""

from cbas import AssociationMeasure, ContextMatrix, Vocabulary, association

# A hand-filled word-by-context count table: three targets, four contexts.
words = ["نظم", "سائح", "حكم", "عجائب", "دول", "جامعة", "القاهرة"]
cells = {
    ("نظم", "دول"): 5, ("نظم", "جامعة"): 10, ("نظم", "القاهرة"): 3,
    ("سائح", "عجائب"): 8, ("سائح", "دول"): 5, ("سائح", "القاهرة"): 14,
    ("حكم", "دول"): 12, ("حكم", "القاهرة"): 9,
}
vocab = Vocabulary(words)
matrix = ContextMatrix(2, vocab, {(vocab.index[w], vocab.index[c]): n for (w, c), n in cells.items()})
print(f"total counts: {matrix.total}")

pmi = AssociationMeasure("pmi")
ppmi = AssociationMeasure("ppmi")
spmi = AssociationMeasure("spmi", alpha=0.75)

print(f"\n{'target':>8} {'context':>10} {'count':>5} {'pmi':>8} {'ppmi':>7} {'spmi.75':>8}")
for target in words[:3]:
    for context in words[3:]:
        n = matrix.count(target, context)
        row = [association(matrix, target, context, m) for m in (pmi, ppmi, spmi)]
        print(f"{target:>8} {context:>10} {n:>5} " + " ".join(f"{v:>8.3f}" if v != float('-inf') else f"{'-inf':>8}" for v in row))

# A zero count gives -inf under plain pmi but a clean 0 under the clipped
# measures; smoothing with alpha < 1 damps the spikes of rare contexts
# (look at the عجائب column) and slightly favors frequent ones.
print("\nsweep of alpha for a rare and a frequent context:")
for alpha in (1.0, 0.9, 0.8, 0.75):
    rare = association(matrix, "سائح", "عجائب", AssociationMeasure("spmi", alpha))
    frequent = association(matrix, "سائح", "القاهرة", AssociationMeasure("spmi", alpha))
    print(f"  alpha={alpha:<5} rare-context score={rare:.4f}  frequent-context score={frequent:.4f}")

# With alpha = 1 smoothing is a no-op: spmi coincides with ppmi.
check = all(
    association(matrix, w, c, AssociationMeasure("spmi", 1.0))
    == association(matrix, w, c, ppmi)
    for w in words
    for c in words
)
print("\nspmi(alpha=1) == ppmi everywhere:", check)
