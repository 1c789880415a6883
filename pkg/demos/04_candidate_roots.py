"""Candidate-root generation step by step: segmentation, template
matching, weak-letter recovery, dictionary validation.

Run from the repository root:  python demos/04_candidate_roots.py
"""

from cbas import (
    bundled_resource_dir,
    expand_weak,
    generate_candidates,
    load_resources,
    normalize,
    parse_pattern,
    segment,
)

resources = load_resources(bundled_resource_dir())
print(
    f"resources: {len(resources.affixes.prefixes)} prefixes, "
    f"{len(resources.affixes.suffixes)} suffixes, "
    f"{len(resources.patterns)} patterns, {len(resources.roots)} roots"
)

# 1. Segmentation tries every affix split that leaves a 2+ letter core.
word = normalize("والكاتبون")
print(f"\nsegmentations of {word}:")
for seg in segment(word, resources.affixes)[:8]:
    print(f"  prefix={seg.prefix!r:12} infix={seg.infix!r:14} suffix={seg.suffix!r}")

# 2. A template matches an infix of its own length; root letters sit in
# the numbered slots. 1ا23 is the template behind active participles.
template = parse_pattern("1ا23")
print(f"\ntemplate {template.source}: match('كاتب') -> {template.match('كاتب')}")
print(f"template {template.source}: instantiate('درس') -> {template.instantiate('درس')}")

# 3. Weak letters mutate; the expansion proposes recoveries in a fixed
# order. A two-letter raw core also tries insertions and doubling.
print(f"\nexpand_weak('قال') -> {expand_weak('قال')}")
print(f"expand_weak('قل')  -> {expand_weak('قل')}")

# 4. End to end: every dictionary-validated root, with its derivation.
for word in ("والكاتبون", "افتتاح", "لدار", "الصغير"):
    candidates = generate_candidates(normalize(word), resources)
    print(f"\ncandidates for {word}:")
    for c in candidates:
        route = c.pattern.source if c.pattern else "bare core"
        weak = f" weak={c.weak_variant}" if c.weak_variant else ""
        print(
            f"  {c.root}  via {c.segmentation.prefix!r}+{c.segmentation.infix!r}+"
            f"{c.segmentation.suffix!r} template {route}{weak}"
        )
