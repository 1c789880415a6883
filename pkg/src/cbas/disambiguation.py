"""Root selection: derive surface words per candidate root and pick the
root whose derivations associate most strongly with the word's context.

Scoring defaults to the nearest preceding non-stopword word as the
context; ``context_mode="window"`` widens it to every filtered word
within the matrix's window on both sides. Ties are broken by the number
of in-vocabulary derivations, then by the bare root's corpus marginal,
then by the lexicographically smallest root, so selection is a pure
function of its inputs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cooccurrence import AssociationMeasure, ContextMatrix, association
from .corpus import filter_tokens, is_arabic_word, normalize, tokenize
from .morphology import CandidateRoot, MorphResources, Pattern, generate_candidates

CONTEXT_MODES = ("previous", "window")


@dataclass(frozen=True)
class StemContext:
    """Filtered words around the target, nearest-first trimmed to the window."""

    preceding: tuple[str, ...] = ()
    following: tuple[str, ...] = ()


@dataclass(frozen=True)
class ScoredRoot:
    root: str
    score: float
    derived_in_vocab: int


@dataclass(frozen=True)
class StemResult:
    """Outcome and diagnostics for one input token."""

    input: str
    normalized: str
    root: str | None
    skip_reason: str | None
    scored: tuple[tuple[CandidateRoot, ScoredRoot], ...] = ()


def derive_words(
    root: str, patterns: Sequence[Pattern], vocabulary
) -> list[str]:
    """Surface words derivable from ``root`` that the matrix knows about.

    Instantiates every pattern whose arity matches, adds the bare root,
    and keeps the in-vocabulary subset (sorted). When nothing survives,
    falls back to the bare root alone so scoring still has a subject.
    """
    forms = {root}
    for pattern in patterns:
        if pattern.root_arity == len(root):
            forms.add(pattern.instantiate(root))
    known = sorted(f for f in forms if f in vocabulary)
    return known if known else [root]


def _context_words(context: StemContext, context_mode: str) -> tuple[str, ...]:
    if context_mode == "previous":
        return context.preceding[-1:]
    if context_mode == "window":
        return context.preceding + context.following
    raise ValueError(f"unknown context mode: {context_mode!r}")


def score_root(
    root: str,
    context: StemContext,
    matrix: ContextMatrix,
    measure: AssociationMeasure,
    patterns: Sequence[Pattern],
    context_mode: str = "previous",
) -> ScoredRoot:
    """Average association between the root's derivations and the context.

    The mean runs over all (derived word, context word) pairs; pairs with
    an out-of-vocabulary member contribute 0. An empty context scores 0.
    Under the plain pmi measure an in-vocabulary pair that never co-occurs
    contributes -inf, which sinks the whole average.
    """
    derived = derive_words(root, patterns, matrix.vocab)
    in_vocab = sum(1 for d in derived if d in matrix.vocab)
    ctx_words = _context_words(context, context_mode)
    if not ctx_words:
        return ScoredRoot(root, 0.0, in_vocab)
    total = 0.0
    pairs = 0
    for d in derived:
        for c in ctx_words:
            pairs += 1
            if d in matrix.vocab and c in matrix.vocab:
                total += association(matrix, d, c, measure)
    return ScoredRoot(root, total / pairs, in_vocab)


def select_root(
    candidates: Sequence[CandidateRoot],
    context: StemContext,
    matrix: ContextMatrix,
    measure: AssociationMeasure,
    patterns: Sequence[Pattern],
    context_mode: str = "previous",
) -> tuple[ScoredRoot, list[ScoredRoot]]:
    """Argmax of score_root over the candidates, with the full score table.

    Ties fall back to more in-vocabulary derivations, then the higher
    corpus marginal of the bare root, then the lexicographically smaller
    root string.
    """
    if not candidates:
        raise ValueError("select_root needs at least one candidate")
    table = [
        score_root(c.root, context, matrix, measure, patterns, context_mode)
        for c in candidates
    ]
    chosen = min(
        table,
        key=lambda s: (-s.score, -s.derived_in_vocab, -matrix.target_marginal(s.root), s.root),
    )
    return chosen, table


class Stemmer:
    """Bundles resources, stopwords, matrix, and measure into one pipeline."""

    def __init__(
        self,
        resources: MorphResources,
        stopwords: frozenset[str],
        matrix: ContextMatrix,
        measure: AssociationMeasure = AssociationMeasure(),
        context_mode: str = "previous",
    ):
        if context_mode not in CONTEXT_MODES:
            raise ValueError(f"context_mode must be one of {CONTEXT_MODES}")
        self.resources = resources
        self.stopwords = stopwords
        self.matrix = matrix
        self.measure = measure
        self.context_mode = context_mode

    def _skip_reason(self, normalized: str) -> str | None:
        if not normalized:
            return "empty"
        if normalized in self.stopwords:
            return "stopword"
        if not is_arabic_word(normalized):
            if all(ch.isdigit() for ch in normalized):
                return "digit"
            if not any(ch.isalnum() for ch in normalized):
                return "punctuation"
            return "non-arabic"
        return None

    def stem(
        self, word: str, before: Iterable[str] = (), after: Iterable[str] = ()
    ) -> StemResult:
        """Stem one raw token given its raw surrounding tokens."""
        normalized = normalize(word)
        reason = self._skip_reason(normalized)
        if reason is not None:
            return StemResult(word, normalized, None, reason)
        keep = self.matrix.window_n - 1
        prev = filter_tokens((normalize(t) for t in before), self.stopwords)
        nxt = filter_tokens((normalize(t) for t in after), self.stopwords)
        context = StemContext(tuple(prev[-keep:]), tuple(nxt[:keep]))
        return self._stem_in_context(word, normalized, context)

    def _stem_in_context(self, word: str, normalized: str, context: StemContext) -> StemResult:
        candidates = generate_candidates(normalized, self.resources)
        if not candidates:
            return StemResult(word, normalized, None, "no-candidates")
        chosen, table = select_root(
            candidates,
            context,
            self.matrix,
            self.measure,
            self.resources.patterns,
            self.context_mode,
        )
        return StemResult(word, normalized, chosen.root, None, tuple(zip(candidates, table)))

    def stem_tokens(self, tokens: Sequence[str], jobs: int = 1) -> list[StemResult]:
        """Stem a raw token stream, each token in its in-stream context.

        Output order follows input order regardless of ``jobs``, and the
        per-token results are identical to sequential stemming.
        """
        normalized = [normalize(t) for t in tokens]
        keep = self.matrix.window_n - 1
        filtered: list[str] = []
        positions: list[int | None] = []
        for norm in normalized:
            if norm and is_arabic_word(norm) and norm not in self.stopwords:
                positions.append(len(filtered))
                filtered.append(norm)
            else:
                positions.append(None)

        def one(i: int) -> StemResult:
            raw, norm = tokens[i], normalized[i]
            reason = self._skip_reason(norm)
            if reason is not None:
                return StemResult(raw, norm, None, reason)
            pos = positions[i]
            context = StemContext(
                tuple(filtered[max(0, pos - keep): pos]),
                tuple(filtered[pos + 1: pos + 1 + keep]),
            )
            return self._stem_in_context(raw, norm, context)

        indices = range(len(tokens))
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(one, indices))
        return [one(i) for i in indices]

    def stem_text(self, text: str, jobs: int = 1) -> list[StemResult]:
        return self.stem_tokens([t.surface for t in tokenize(text)], jobs=jobs)
