"""Shared tables and hypothesis strategies."""
from hypothesis import strategies as st

from absorb_lab.core import validate_table
from absorb_lab.generators import enumerate_semigroups, random_transformation_semigroup

LEFT_ZERO = ((0, 0), (1, 1))
BOTTLENECK = ((0, 1, 2, 3), (1, 0, 2, 3), (2, 2, 3, 3), (3, 3, 3, 3))
# meet semilattice {⊥, a, b} with a ∧ b = ⊥
ANTICHAIN = ((0, 0, 0), (0, 1, 0), (0, 0, 2))
# the same with a top t adjoined
DIAMOND = ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3))


def semigroups(max_degree: int = 3, max_gens: int = 3):
    """Hypothesis strategy: random transformation semigroups."""
    return st.builds(
        random_transformation_semigroup,
        st.integers(1, max_degree),
        st.integers(1, max_gens),
        st.integers(0, 2**64 - 1),
    )


def tables(max_n: int = 3):
    """Hypothesis strategy: associative tables of order ≤ max_n, drawn from the enumeration."""
    corpus = [S for n in range(1, max_n + 1) for S in enumerate_semigroups(n)]
    return st.sampled_from(corpus)


def sg(rows, labels=None):
    return validate_table(rows, labels)
