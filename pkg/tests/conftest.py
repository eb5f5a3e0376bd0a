import numpy as np
import pytest

from grunsky_hankel.families import (
    convex_from_starlike,
    kfold_koebe,
    random_atoms,
    starlike_from_herglotz,
)

CORPUS_SEED = 20240611


def build_corpus(seed=CORPUS_SEED, n=100):
    """100 random Herglotz-starlike functions (1..4 atoms), their convex transforms, kfold Koebe k=1..4."""
    rng = np.random.default_rng(seed)
    starlike = [starlike_from_herglotz(random_atoms(rng, 1 + i % 4)) for i in range(n)]
    convex = [convex_from_starlike(g) for g in starlike]
    special = [kfold_koebe(k) for k in range(1, 5)]
    return {"herglotz": starlike, "convex": convex, "kfold_koebe": special}


@pytest.fixture(scope="session")
def corpus_by_family():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus(corpus_by_family):
    return [f for fs in corpus_by_family.values() for f in fs]
