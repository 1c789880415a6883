"""Build the sliding-window context matrix from the bundled sample corpus,
poke at its counts, and round-trip it through the file format.

Run from the repository root:  python demos/02_context_matrix.py
"""

import tempfile
from pathlib import Path

from cbas import (
    build_matrix,
    bundled_resource_dir,
    iter_token_streams,
    load_matrix,
    load_stopwords,
    read_corpus,
    save_matrix,
)

stopwords = load_stopwords(bundled_resource_dir() / "stopwords.txt")
documents = read_corpus(Path("data/sample_corpus"))
streams = list(iter_token_streams(documents, stopwords))

# Window size 3: each word is associated with neighbours at distance 1 and 2,
# on both sides, never across document boundaries.
matrix = build_matrix(streams, window_n=3)
print(f"documents: {len(documents)}")
print(f"vocabulary: {len(matrix.vocab)} words")
print(f"window pairs counted: {matrix.total}")

# A few co-occurrence lookups around the sports vocabulary.
for target, context in [
    ("الدورة", "افتتاح"),
    ("الدورة", "الرياضية"),
    ("المدرب", "الفريق"),
    ("الطعام", "المدرب"),
]:
    print(f"count({target}, {context}) = {matrix.count(target, context)}")

# Marginals: total window pairs a word participates in, by role.
word = "الوزير"
print(f"\n{word}: as target {matrix.target_marginal(word)}, as context {matrix.context_marginal(word)}")

# The TSV format round-trips exactly, byte for byte.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "matrix.tsv"
    save_matrix(matrix, path)
    print(f"\nsaved {path.stat().st_size} bytes; header:")
    print(" ", path.read_text(encoding="utf-8").splitlines()[0])
    reloaded = load_matrix(path)
    print("reload equal to original:", reloaded == matrix)
