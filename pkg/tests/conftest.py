import pytest

from modext.extension import trivial_extension
from modext.derivations import derivation_space
from modext.samples import corpus


@pytest.fixture(scope="session")
def corpus_pairs():
    return corpus()


@pytest.fixture(scope="session")
def corpus_extensions(corpus_pairs):
    """[(name, algebra, module, T(A,U))] for every corpus pair."""
    return [(name, a, u, trivial_extension(a, u)) for name, a, u in corpus_pairs]


@pytest.fixture(scope="session")
def corpus_der_t(corpus_extensions):
    """Der(T) bases for every corpus extension; computed once, reused."""
    out = []
    for name, a, u, t in corpus_extensions:
        der = derivation_space(t.total, t.total.self_bimodule())
        out.append((name, a, u, t, der))
    return out
