import random

import pytest

from fwpp.lattice import LatticeError, make_fano_triangle


def random_fano_triangles(count, bound=12, seed=20250823):
    """Deterministic corpus of random Fano triangles via rejection sampling."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pts = [(rng.randint(-bound, bound), rng.randint(-bound, bound))
               for _ in range(3)]
        try:
            out.append(make_fano_triangle(*pts))
        except LatticeError:
            continue
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_fano_triangles(220)


@pytest.fixture(scope="session")
def small_corpus():
    return random_fano_triangles(40, bound=6, seed=7)
