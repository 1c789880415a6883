from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("deterministic")

from cbas.cooccurrence import ContextMatrix, Vocabulary
from cbas.corpus import load_stopwords
from cbas.morphology import (
    AffixLists,
    MorphResources,
    bundled_resource_dir,
    load_resources,
    parse_pattern,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"

# Known word-by-context counts used across the association tests: three
# target rows, four context columns, eight non-zero cells, total 66.
FIXTURE_WORDS = [
    "نظم",  # نظم
    "سائح",  # سائح
    "حكم",  # حكم
    "عجائب",  # عجائب
    "دول",  # دول
    "جامعة",  # جامعة
    "القاهرة",  # القاهرة
]

FIXTURE_COUNTS = {
    ("نظم", "دول"): 5,
    ("نظم", "جامعة"): 10,
    ("نظم", "القاهرة"): 3,
    ("سائح", "عجائب"): 8,
    ("سائح", "دول"): 5,
    ("سائح", "القاهرة"): 14,
    ("حكم", "دول"): 12,
    ("حكم", "القاهرة"): 9,
}


def make_fixture_matrix(scale: int = 1) -> ContextMatrix:
    vocab = Vocabulary(FIXTURE_WORDS)
    counts = {
        (vocab.index[w], vocab.index[c]): n * scale
        for (w, c), n in FIXTURE_COUNTS.items()
    }
    return ContextMatrix(2, vocab, counts)


@pytest.fixture
def count_matrix() -> ContextMatrix:
    return make_fixture_matrix()


@pytest.fixture(scope="session")
def bundled_resources() -> MorphResources:
    return load_resources(bundled_resource_dir())


@pytest.fixture(scope="session")
def bundled_stopwords() -> frozenset[str]:
    return load_stopwords(bundled_resource_dir() / "stopwords.txt")


def make_toy_resources(
    prefixes=("", "و", "ال", "وال", "ب", "بال", "ل"),
    suffixes=("", "ة", "ون", "ين", "ها", "ي"),
    pattern_lines=("123", "1ا23", "12ا3", "12و3", "12ي3", "م123", "ي123", "ا12ا3", "1234"),
    roots=("قول", "قيل", "كتب", "درس", "سرح", "دور", "دير", "صغر", "رجل", "حقق"),
) -> MorphResources:
    return MorphResources(
        AffixLists(frozenset(prefixes), frozenset(suffixes)),
        tuple(parse_pattern(p) for p in pattern_lines),
        frozenset(roots),
    )


@pytest.fixture
def toy_resources() -> MorphResources:
    return make_toy_resources()
