"""Candidate-root generation: affix segmentation, template-pattern matching,
weak-letter recovery, and dictionary validation.

The linguistic data lives in four plain-text resource files (prefixes,
suffixes, patterns, roots). Pattern templates are written with digit
slots instead of the traditional placeholder letters, e.g. ``1ا23`` is
the template that turns the root ك ت ب into كاتب. Digits 1..5 stand for
root letters in order; any other character is a literal that must appear
verbatim in the word. Slot 3 may repeat, which expresses templates where
the third root letter surfaces twice.

A word can, and regularly does, yield several dictionary-valid roots;
ranking them is the disambiguation module's job. Everything here is
deterministic: segmentations are ordered longest-infix-first, patterns in
file order, weak variants in a fixed expansion order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .corpus import is_arabic_word, normalize
from .errors import FormatError

WEAK_LETTERS = "اوي"  # ا و ي

_SLOT_CHARS = "12345"
# Insertion order for two-letter raw roots: و, ي, ا.
_INSERTION_LETTERS = "ويا"


@dataclass(frozen=True)
class Segmentation:
    prefix: str
    infix: str
    suffix: str

    @property
    def word(self) -> str:
        return self.prefix + self.infix + self.suffix


@dataclass(frozen=True)
class AffixLists:
    prefixes: frozenset[str]
    suffixes: frozenset[str]


class Pattern:
    """A derivation template: literal letters plus numbered root slots."""

    __slots__ = ("cells", "source", "length", "root_arity")

    def __init__(self, cells: tuple[int | str, ...], source: str):
        self.cells = cells
        self.source = source
        self.length = len(cells)
        self.root_arity = max(c for c in cells if isinstance(c, int))

    def match(self, infix: str) -> str | None:
        """Extract the raw root if the infix fits this template exactly.

        Requires equal length, literal cells matching letter-for-letter,
        and a repeated slot carrying the same letter at every occurrence.
        """
        if len(infix) != self.length:
            return None
        letters: dict[int, str] = {}
        for cell, ch in zip(self.cells, infix):
            if isinstance(cell, str):
                if cell != ch:
                    return None
            elif cell in letters:
                if letters[cell] != ch:
                    return None
            else:
                letters[cell] = ch
        return "".join(letters[i] for i in range(1, self.root_arity + 1))

    def instantiate(self, root: str) -> str:
        """Fill the slots with the letters of ``root`` (arities must agree)."""
        if len(root) != self.root_arity:
            raise ValueError(
                f"pattern {self.source!r} takes a {self.root_arity}-letter root, got {root!r}"
            )
        return "".join(c if isinstance(c, str) else root[c - 1] for c in self.cells)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Pattern) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Pattern({self.source!r})"


@dataclass(frozen=True)
class CandidateRoot:
    """A dictionary-validated root plus how it was reached.

    ``pattern`` is None for the bare two-letter-infix route (no length-2
    template exists); ``weak_variant`` is None when the raw root was
    already in the dictionary unchanged. Provenance is diagnostic only.
    """

    root: str
    segmentation: Segmentation
    pattern: Pattern | None
    weak_variant: str | None


@dataclass(frozen=True)
class MorphResources:
    affixes: AffixLists
    patterns: tuple[Pattern, ...]
    roots: frozenset[str]


def parse_pattern(line: str, *, path: str | None = None, lineno: int | None = None) -> Pattern:
    """Parse one digit-slot template line and enforce slot discipline:
    first occurrences run 1, 2, 3[, 4[, 5]]; only slot 3 may repeat.
    """
    cells: list[int | str] = []
    max_seen = 0
    for ch in line:
        if ch in _SLOT_CHARS:
            slot = int(ch)
            if slot == max_seen + 1:
                max_seen = slot
            elif slot == 3 and max_seen >= 3:
                pass  # legal repeat of the third root letter
            else:
                raise FormatError(
                    f"pattern {line!r}: slot indices out of first-occurrence order",
                    path=path,
                    line=lineno,
                )
            cells.append(slot)
        elif is_arabic_word(ch):
            cells.append(ch)
        else:
            raise FormatError(
                f"pattern {line!r}: invalid character {ch!r}", path=path, line=lineno
            )
    if max_seen < 3:
        raise FormatError(
            f"pattern {line!r}: a template needs root slots 1..3 at least",
            path=path,
            line=lineno,
        )
    return Pattern(tuple(cells), line)


def segment(word: str, affixes: AffixLists) -> list[Segmentation]:
    """All (prefix, infix, suffix) splits licensed by the affix lists.

    The infix must keep at least two letters. Ordered by decreasing infix
    length, then (prefix, suffix) lexicographically; the trivial split
    comes first whenever the word itself is long enough.
    """
    splits = []
    for p in affixes.prefixes:
        if not word.startswith(p):
            continue
        rest = word[len(p):]
        for s in affixes.suffixes:
            if s and not rest.endswith(s):
                continue
            infix = rest[: len(rest) - len(s)] if s else rest
            if len(infix) >= 2:
                splits.append(Segmentation(p, infix, s))
    splits.sort(key=lambda seg: (-len(seg.infix), seg.prefix, seg.suffix))
    return splits


def expand_weak(raw_root: str) -> list[str]:
    """Weak-letter variants of a raw root, the raw root itself first."""
    return [variant for variant, _ in expand_weak_tagged(raw_root)]


def expand_weak_tagged(raw_root: str) -> list[tuple[str, str | None]]:
    """Like expand_weak but each variant carries a short provenance tag.

    Variant order: the unchanged raw root, then single-position
    substitutions of each weak letter by the other two (left to right,
    replacements in ا و ي order), then, for two-letter raws only,
    insertions of و / ي / ا at each of the three positions followed by
    doubling of the final letter. Duplicates are dropped, first tag wins.
    """
    variants: list[tuple[str, str | None]] = [(raw_root, None)]
    for i, ch in enumerate(raw_root):
        if ch in WEAK_LETTERS:
            for repl in WEAK_LETTERS:
                if repl != ch:
                    variants.append(
                        (raw_root[:i] + repl + raw_root[i + 1:], f"sub:{i}:{ch}>{repl}")
                    )
    if len(raw_root) == 2:
        for letter in _INSERTION_LETTERS:
            for pos in range(3):
                variants.append(
                    (raw_root[:pos] + letter + raw_root[pos:], f"ins:{pos}:{letter}")
                )
        variants.append((raw_root + raw_root[-1], "double"))
    seen: set[str] = set()
    unique = []
    for variant, tag in variants:
        if variant not in seen:
            seen.add(variant)
            unique.append((variant, tag))
    return unique


def generate_candidates(word: str, resources: MorphResources) -> list[CandidateRoot]:
    """Every dictionary-validated root reachable from ``word``.

    Tries each segmentation, then each pattern of the infix's length, then
    each weak variant of the extracted raw root; a two-letter infix is
    taken as a raw root directly. Deduplicated by root string, first
    derivation wins; the order is fully deterministic.
    """
    candidates: list[CandidateRoot] = []
    seen: set[str] = set()

    def keep(root: str, seg: Segmentation, pattern: Pattern | None, tag: str | None) -> None:
        if root in resources.roots and root not in seen:
            seen.add(root)
            candidates.append(CandidateRoot(root, seg, pattern, tag))

    for seg in segment(word, resources.affixes):
        for pattern in resources.patterns:
            if pattern.length != len(seg.infix):
                continue
            raw = pattern.match(seg.infix)
            if raw is None:
                continue
            for variant, tag in expand_weak_tagged(raw):
                keep(variant, seg, pattern, tag)
        if len(seg.infix) == 2:
            for variant, tag in expand_weak_tagged(seg.infix):
                keep(variant, seg, None, tag)
    return candidates


# -- resource files ----------------------------------------------------------


def _read_lines(path: Path) -> Iterable[tuple[int, str]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def _load_affix_file(path: Path) -> frozenset[str]:
    entries = {""}
    for lineno, line in _read_lines(path):
        entry = normalize(line)
        if not entry or not is_arabic_word(entry):
            raise FormatError(
                f"affix {line!r} is not an Arabic letter sequence",
                path=str(path),
                line=lineno,
            )
        entries.add(entry)
    return frozenset(entries)


def load_resources(resource_dir: str | Path) -> MorphResources:
    """Load prefixes.txt, suffixes.txt, patterns.txt, and roots.txt."""
    resource_dir = Path(resource_dir)
    for name in ("prefixes.txt", "suffixes.txt", "patterns.txt", "roots.txt"):
        if not (resource_dir / name).is_file():
            raise FormatError(f"missing resource file {name}", path=str(resource_dir))

    prefixes = _load_affix_file(resource_dir / "prefixes.txt")
    suffixes = _load_affix_file(resource_dir / "suffixes.txt")

    patterns_path = resource_dir / "patterns.txt"
    patterns = [
        parse_pattern(normalize(line), path=str(patterns_path), lineno=lineno)
        for lineno, line in _read_lines(patterns_path)
    ]

    roots_path = resource_dir / "roots.txt"
    roots = set()
    for lineno, line in _read_lines(roots_path):
        root = normalize(line)
        if not is_arabic_word(root):
            raise FormatError(
                f"root {line!r} is not an Arabic letter sequence",
                path=str(roots_path),
                line=lineno,
            )
        if not 3 <= len(root) <= 5:
            raise FormatError(
                f"root {line!r} has length {len(root)}, expected 3-5",
                path=str(roots_path),
                line=lineno,
            )
        roots.add(root)

    return MorphResources(AffixLists(prefixes, suffixes), tuple(patterns), frozenset(roots))


def bundled_resource_dir() -> Path:
    """Directory of the resource files shipped inside the package."""
    return Path(__file__).resolve().parent / "resources"
