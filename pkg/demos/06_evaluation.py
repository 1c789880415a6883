"""Score the stemmer against the bundled annotated fixture: stemming
accuracy plus the label-aware (classification) and label-agnostic
(clustering) grouping metrics.

Run from the repository root:  python demos/06_evaluation.py
"""

from pathlib import Path

from cbas import (
    Stemmer,
    build_matrix,
    build_clusters,
    bundled_resource_dir,
    classification_metrics,
    clustering_metrics,
    iter_token_streams,
    load_resources,
    load_stopwords,
    read_corpus,
    stemming_accuracy,
)
from cbas.evaluation import load_gold, load_gold_sequence, unrooted_label

resources = load_resources(bundled_resource_dir())
stopwords = load_stopwords(bundled_resource_dir() / "stopwords.txt")
matrix = build_matrix(
    iter_token_streams(read_corpus(Path("data/sample_corpus")), stopwords), window_n=3
)
stemmer = Stemmer(resources, stopwords, matrix)

# The gold file is a token stream: row order supplies each word's context.
gold_path = Path("data/gold_sample.tsv")
pairs = load_gold(gold_path)
sequence = load_gold_sequence(gold_path)
results = stemmer.stem_tokens([p.word for p in sequence])
stemmed = {}
for pair, result in zip(sequence, results):
    stemmed.setdefault(pair.word, result.root)

accuracy = stemming_accuracy(pairs, lambda w: stemmed.get(w))
rooted = [p for p in pairs if p.gold_root is not None]
print(f"gold pairs: {len(rooted)} rooted, {len(pairs) - len(rooted)} rootless rows")
print(f"stemming accuracy: {accuracy:.4f}")

# Group words by root, on both sides; unrooted words become singletons.
gold_assignment = {}
for p in rooted:
    gold_assignment.setdefault(p.word, p.gold_root)
words = sorted(gold_assignment)
extracted_assignment = {w: stemmed.get(w) or unrooted_label(w) for w in words}
classif = classification_metrics(
    build_clusters(extracted_assignment), build_clusters(gold_assignment), words
)
clust = clustering_metrics(
    build_clusters(extracted_assignment), build_clusters(gold_assignment), words
)
print(f"\n{'':>14} {'accuracy':>9} {'precision':>10} {'recall':>7} {'f1':>7}")
for name, m in (("classification", classif), ("clustering", clust)):
    print(f"{name:>14} {m.accuracy:>9.4f} {m.precision:>10.4f} {m.recall:>7.4f} {m.f1:>7.4f}")

print("\nwords the pipeline missed:")
for p in rooted:
    got = stemmed.get(p.word)
    if got != p.gold_root:
        print(f"  {p.word}: gold {p.gold_root}, got {got}")
