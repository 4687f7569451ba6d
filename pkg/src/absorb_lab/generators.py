"""Semigroup corpora: named families, transformation semigroups, exhaustive enumeration.

Random corpora use numpy's PCG64 bit generator (``numpy.random.default_rng``)
seeded with a 64-bit integer, so a seed pins the corpus on any platform.
Independent sub-streams are derived with ``SeedSequence.spawn``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from .core import FiniteSemigroup, validate_table
from .errors import BadParameter, NTooLarge, SizeExplosion, UnknownFamily

MAX_FAMILY_SIZE = 512
MAX_TRANSFORMATION_SIZE = 10_000

SIZED_FAMILIES = ("left_zero", "right_zero", "min_chain", "max_chain", "cyclic",
                  "null", "paper_example_ef_gadget", "two_omega_truncation")
FIXED_FAMILIES = ("paper_example_left_zero", "paper_example_bottleneck", "inf_addition_toy")
WRAPPING_FAMILIES = ("adjoin_zero", "adjoin_identity")


@dataclass(frozen=True)
class GeneratorSpec:
    """Family tag plus parameters.

    ``param`` is the size (or truncation depth ``k``) for sized families;
    ``base`` is the semigroup (or nested spec) for ``adjoin_*``.
    """

    family: str
    param: int | None = None
    base: Union["GeneratorSpec", FiniteSemigroup, None] = None

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        """Parse ``family[:param]`` or ``adjoin_zero:<inner spec>``."""
        head, _, rest = text.strip().partition(":")
        if head in WRAPPING_FAMILIES:
            if not rest:
                raise BadParameter(f"{head} needs an inner family, e.g. {head}:min_chain:3")
            return cls(head, base=cls.parse(rest))
        if head in SIZED_FAMILIES:
            try:
                return cls(head, int(rest))
            except ValueError:
                raise BadParameter(f"{head} needs an integer parameter, got {rest!r}") from None
        if head in FIXED_FAMILIES:
            if rest:
                raise BadParameter(f"{head} takes no parameter")
            return cls(head)
        raise UnknownFamily(head)

    def __str__(self) -> str:
        if self.family in WRAPPING_FAMILIES:
            return f"{self.family}:{self.base}"
        return self.family if self.param is None else f"{self.family}:{self.param}"


def _frac_label(q: Fraction) -> str:
    return str(q)


def _sized(spec: GeneratorSpec, lo: int = 1) -> int:
    k = spec.param
    if k is None or not lo <= k <= MAX_FAMILY_SIZE:
        raise BadParameter(f"{spec.family} parameter must be in [{lo}, {MAX_FAMILY_SIZE}], got {k}")
    return k


def _fresh_label(labels: Sequence[str], want: str) -> str:
    lab = want
    while lab in labels:
        lab += "'"
    return lab


def generate_family(spec: GeneratorSpec | str) -> FiniteSemigroup:
    """Build a member of a named family; every result passes ``validate_table``."""
    if isinstance(spec, str):
        spec = GeneratorSpec.parse(spec)
    fam = spec.family
    labels = None

    if fam == "left_zero":
        n = _sized(spec)
        raw = [[i] * n for i in range(n)]
    elif fam == "right_zero":
        n = _sized(spec)
        raw = [list(range(n)) for _ in range(n)]
    elif fam == "min_chain":
        n = _sized(spec)
        raw = [[min(i, j) for j in range(n)] for i in range(n)]
    elif fam == "max_chain":
        n = _sized(spec)
        raw = [[max(i, j) for j in range(n)] for i in range(n)]
    elif fam == "cyclic":
        n = _sized(spec)
        raw = [[(i + j) % n for j in range(n)] for i in range(n)]
    elif fam == "null":
        # n-1 nilpotent elements plus the zero at index 0
        n = _sized(spec)
        raw = [[0] * n for _ in range(n)]
    elif fam == "paper_example_left_zero":
        raw, labels = [[0, 0], [1, 1]], ["e", "f"]
    elif fam == "paper_example_bottleneck":
        raw = [[0, 1, 2, 3],
               [1, 0, 2, 3],
               [2, 2, 3, 3],
               [3, 3, 3, 3]]
        labels = ["u", "v", "w", "α"]
    elif fam == "paper_example_ef_gadget":
        # D = {1/k < ... < 1/2 < 1} under min, then e, f with e+f = f+e = 1
        k = _sized(spec)
        one = k - 1
        raw = [[0] * (k + 2) for _ in range(k + 2)]
        for i in range(k + 2):
            for j in range(k + 2):
                if i < k and j < k:
                    raw[i][j] = min(i, j)
                elif i < k:
                    raw[i][j] = i
                elif j < k:
                    raw[i][j] = j
                else:
                    raw[i][j] = i if i == j else one
        labels = [_frac_label(Fraction(1, k - i)) for i in range(k)] + ["e", "f"]
    elif fam == "two_omega_truncation":
        # {1+1/n} and {1-1/n}, n = 1..k, under max; indexed from the
        # Rees-least element (the numerically largest) upwards
        k = _sized(spec)
        vals = sorted({Fraction(1) + Fraction(1, m) for m in range(1, k + 1)}
                      | {Fraction(1) - Fraction(1, m) for m in range(1, k + 1)}, reverse=True)
        n = len(vals)
        raw = [[min(i, j) for j in range(n)] for i in range(n)]
        labels = [_frac_label(v) for v in vals]
    elif fam == "inf_addition_toy":
        # {-inf, 0, +inf} with inf-addition: (+inf) + (-inf) = +inf
        def s(a, b):
            if 2 in (a, b):
                return 2
            if 0 in (a, b):
                return 0
            return 1
        raw = [[s(a, b) for b in range(3)] for a in range(3)]
        labels = ["-inf", "0", "+inf"]
    elif fam in WRAPPING_FAMILIES:
        base = spec.base
        if base is None:
            raise BadParameter(f"{fam} needs a base semigroup")
        if isinstance(base, (GeneratorSpec, str)):
            base = generate_family(base)
        n = base.n
        if n + 1 > MAX_FAMILY_SIZE:
            raise BadParameter("base semigroup too large")
        raw = [list(row) + [0] for row in base.table] + [[0] * (n + 1)]
        for i in range(n + 1):
            if fam == "adjoin_zero":
                raw[i][n] = raw[n][i] = n
            else:
                raw[i][n] = raw[n][i] = i
        if base.labels is not None:
            labels = list(base.labels) + [_fresh_label(base.labels, "0̂" if fam == "adjoin_zero" else "1̂")]
    else:
        raise UnknownFamily(fam)
    return validate_table(raw, labels)


# --- transformation semigroups ---------------------------------------------

def compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """``f ∘ g``: apply ``g`` first, then ``f``."""
    return tuple(f[x] for x in g)


def transformation_semigroup(generators: Sequence[Sequence[int]], degree: int,
                             max_size: int = MAX_TRANSFORMATION_SIZE) -> FiniteSemigroup:
    """Close self-maps of ``{0..degree-1}`` under composition.

    The semigroup operation is right-to-left composition, ``f + g = f ∘ g``.
    Elements are indexed generators first (in the given order, duplicates
    dropped), then in breadth-first order of discovery.  Labels spell out the
    image tuple, e.g. ``"021"``.
    """
    gens: list[tuple[int, ...]] = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if len(g) != degree or any(not 0 <= x < degree for x in g):
            raise BadParameter(f"{g} is not a self-map of range({degree})")
        if g not in gens:
            gens.append(g)
    if not gens:
        raise BadParameter("need at least one generator")
    elems = list(gens)
    index = {g: i for i, g in enumerate(elems)}
    head = 0
    while head < len(elems):
        a = elems[head]
        head += 1
        for g in gens:
            for c in (compose(a, g), compose(g, a)):
                if c not in index:
                    index[c] = len(elems)
                    elems.append(c)
                    if len(elems) > max_size:
                        raise SizeExplosion(f"closure exceeds {max_size} elements")
    n = len(elems)
    arr = np.array(elems, dtype=np.int64)
    weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    codes = arr @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((n, n), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, n * degree))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        # prod[i, j, x] = elems[i][elems[j][x]]
        prod = arr[start:stop][:, arr]
        pc = prod @ weights
        table[start:stop] = order[np.searchsorted(sorted_codes, pc)]
    labels = ["".join(str(x) for x in e) if degree <= 10 else "_".join(map(str, e)) for e in elems]
    return validate_table(table.tolist(), labels)


def random_transformation_semigroup(degree: int, num_generators: int, seed: int) -> FiniteSemigroup:
    """Closure of ``num_generators`` random self-maps drawn from PCG64(seed)."""
    if not 1 <= degree <= 6:
        raise BadParameter(f"degree must be in [1, 6], got {degree}")
    if not 1 <= num_generators <= 5:
        raise BadParameter(f"num_generators must be in [1, 5], got {num_generators}")
    rng = np.random.default_rng(np.uint64(seed))
    maps = rng.integers(0, degree, size=(num_generators, degree))
    return transformation_semigroup(maps.tolist(), degree)


def random_corpus_seeds(master_seed: int, count: int) -> list[int]:
    """Derive ``count`` independent 64-bit seeds from one master seed."""
    children = np.random.SeedSequence(master_seed).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


# --- exhaustive enumeration ------------------------------------------------

def _cell_order(n: int, order: str) -> list[tuple[int, int]]:
    if order == "row":
        return [(i, j) for i in range(n) for j in range(n)]
    if order == "column":
        return [(i, j) for j in range(n) for i in range(n)]
    if order == "diagonal":
        return sorted(((i, j) for i in range(n) for j in range(n)), key=lambda c: (c[0] + c[1], c[0]))
    raise BadParameter(f"unknown cell order {order!r}")


def enumerate_tables(n: int, order: str = "row") -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking over cells in the given order, pruning on any fully
    determined associativity triple that fails."""
    if n < 1:
        raise BadParameter("n must be >= 1")
    if n > 4:
        raise NTooLarge(f"exhaustive enumeration supports n <= 4, got {n}")
    cells = _cell_order(n, order)
    t = [[-1] * n for _ in range(n)]
    r = range(n)

    def consistent(i: int, j: int) -> bool:
        # every triple whose evaluation reads cell (i, j)
        for a in r:
            for b in r:
                ab = t[a][b]
                if ab < 0:
                    continue
                for c in r:
                    bc = t[b][c]
                    if bc < 0:
                        continue
                    if not ((a == i and b == j) or (b == i and c == j)
                            or (ab == i and c == j) or (a == i and bc == j)):
                        continue
                    lhs = t[ab][c]
                    rhs = t[a][bc]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
        return True

    def rec(pos: int):
        if pos == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[pos]
        for v in r:
            t[i][j] = v
            if consistent(i, j):
                yield from rec(pos + 1)
        t[i][j] = -1

    yield from rec(0)


def enumerate_semigroups(n: int, order: str = "row") -> Iterator[FiniteSemigroup]:
    """Every associative n x n table exactly once (raw tables, not up to
    isomorphism).  With the default row-major order the stream is in
    lexicographic order of the flattened table."""
    for tab in enumerate_tables(n, order):
        yield FiniteSemigroup(tab)


def brute_force_count(n: int) -> int:
    """Count associative tables by scanning all n**(n*n) grids (n <= 3)."""
    if n > 3:
        raise NTooLarge("brute force scan is only practical for n <= 3")
    import itertools

    count = 0
    r = range(n)
    for flat in itertools.product(r, repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in r]
        if all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r):
            count += 1
    return count
