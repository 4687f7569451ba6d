"""Closed convex C-invariant polyhedra in the plane under A ⊕ B = cl(A + B).

Everything is exact (``fractions.Fraction``).  An element is EMPTY, FULL
(the whole plane) or POLY: conv(points) + cone(rays) with cone(rays) ⊇ C.
For polyhedra the Minkowski sum is already closed, so ⊕ is the plain sum.

Canonical form in d = 2 (structural equality is set equality):

* the cone is classified as zero / ray / pointed / line / halfplane / full,
  with primitive integer generators;
* a full cone turns the element into FULL;
* a halfplane {n·x ≥ a} is stored with the single point a·n/|n|²;
* a strip {lo ≤ n·x ≤ hi} along a line is stored with the points lo·n/|n|²
  and hi·n/|n|² (one point when lo = hi);
* otherwise the points are the vertices, found by mapping the cone onto the
  positive quadrant (pointed), the upward ray (ray), or nothing (zero) and
  taking the appropriate lower convex chain.

Only support_inf and the halfspace formula work for d ≠ 2 (uncanonicalized
data); everything that needs set equality requires d = 2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteSemigroup, validate_table
from .errors import (BadZ, DimensionMismatch, DimensionUnsupported, NormalNotInDualCone,
                     NotClosed, NotIdempotent, PreconditionViolated, ZeroNormal)

Vec = tuple  # tuple of Fractions (points) or ints (primitive directions)


def frac(x) -> Fraction:
    """Parse ints, Fractions and "p/q" strings; floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floats are not allowed; use 'p/q' strings")
    return Fraction(x)


def vec(*coords) -> tuple[Fraction, ...]:
    return tuple(frac(c) for c in coords)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"vectors of length {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _rot90(a):
    return (-a[1], a[0])


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(s, a):
    return tuple(s * x for x in a)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Smallest integer vector with the same direction (v must be non-zero)."""
    fr = [Fraction(x) for x in v]
    if not any(fr):
        raise ZeroNormal("zero vector has no direction")
    m = lcm(*(f.denominator for f in fr))
    ints = [int(f * m) for f in fr]
    g = gcd(*ints)
    return tuple(i // g for i in ints)


# --- cones -------------------------------------------------------------------

def _half(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = _cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _canon_line(d):
    d = primitive(d)
    neg = tuple(-x for x in d)
    return max(d, neg)


FULL_GENS = ((1, 0), (0, 1), (-1, 0), (0, -1))


@dataclass(frozen=True)
class Cone:
    """Closed convex cone in the plane.

    ``gens`` always generate the cone.  ``kind`` is one of zero, ray,
    pointed (gens in counter-clockwise order), line, halfplane (``normal``
    set, cone = {x : normal·x ≥ 0}) or full.
    """

    kind: str
    gens: tuple[tuple[int, int], ...]
    normal: tuple[int, int] | None = None

    @classmethod
    def of(cls, rays: Iterable[Sequence]) -> "Cone":
        rs = sorted({primitive(r) for r in rays if any(Fraction(x) for x in r)})
        if any(len(r) != 2 for r in rs):
            raise DimensionUnsupported("cones are only canonicalized in the plane")
        if not rs:
            return cls("zero", ())
        if len(rs) == 1:
            return cls("ray", (rs[0],))
        rs.sort(key=cmp_to_key(_angle_cmp))
        m = len(rs)
        half_gap = None
        for i in range(m):
            a, b = rs[i], rs[(i + 1) % m]
            c = _cross(a, b)
            if c < 0:
                return cls("pointed", (b, a))
            if c == 0 and a[0] * b[0] + a[1] * b[1] < 0:
                half_gap = (a, b)
        if half_gap is not None:
            a, b = half_gap
            d = _canon_line(a)
            if m == 2:
                return cls("line", (d, tuple(-x for x in d)))
            n = primitive(_rot90(b))
            return cls("halfplane", (d, tuple(-x for x in d), n), n)
        return cls("full", FULL_GENS)

    def contains(self, x: Sequence) -> bool:
        k = self.kind
        if k == "full":
            return True
        if k == "zero":
            return not any(x)
        if k == "halfplane":
            return dot(self.normal, x) >= 0
        if k == "line":
            return _cross(self.gens[0], x) == 0
        if k == "ray":
            r = self.gens[0]
            return _cross(r, x) == 0 and dot(r, x) >= 0
        r1, r2 = self.gens
        return _cross(r1, x) >= 0 and _cross(x, r2) >= 0

    def __ge__(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.gens)

    def in_dual(self, y: Sequence) -> bool:
        """y ∈ K^+ = {y : y·k ≥ 0 for all k in the cone}."""
        return all(dot(y, g) >= 0 for g in self.gens)


POSITIVE_QUADRANT = Cone.of([(1, 0), (0, 1)])


# --- elements ----------------------------------------------------------------

class Kind(Enum):
    EMPTY = "empty"
    FULL = "full"
    POLY = "poly"


@dataclass(frozen=True)
class ConlinearElem:
    kind: Kind
    points: tuple = ()
    cone: Cone | None = None
    raw_rays: tuple = ()
    canonical: bool = True

    @property
    def rays(self) -> tuple:
        return self.cone.gens if self.cone is not None else self.raw_rays

    @property
    def d(self) -> int | None:
        return len(self.points[0]) if self.points else None

    def __str__(self) -> str:
        if self.kind is not Kind.POLY:
            return self.kind.value.upper()
        pts = ", ".join("(" + ", ".join(str(c) for c in p) + ")" for p in self.points)
        return f"conv{{{pts}}} + {self.cone.kind if self.cone else 'raw'}{list(self.rays)}"


EMPTY = ConlinearElem(Kind.EMPTY)
FULL = ConlinearElem(Kind.FULL)


def _lower_chain(pts: list) -> list:
    """Lower convex chain of points sorted by (x, y) with distinct x."""
    h: list = []
    for p in pts:
        while len(h) >= 2 and _cross(_sub(h[-1], h[-2]), _sub(p, h[-2])) <= 0:
            h.pop()
        h.append(p)
    return h


def _hull(pts: list) -> list:
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower = _lower_chain(pts)
    upper = _lower_chain(pts[::-1])
    return lower[:-1] + upper[:-1]


def _vertices_over(pts: list, K: Cone) -> list:
    if K.kind == "zero":
        return _hull(pts)
    if K.kind == "ray":
        r = K.gens[0]
        q = _rot90(r)
        det = Fraction(_cross(q, r))
        coords = {}
        for p in pts:
            a, b = _cross(p, r) / det, _cross(q, p) / det
            if a not in coords or b < coords[a][0]:
                coords[a] = (b, p)
        chain = _lower_chain(sorted((a, b) for a, (b, _) in coords.items()))
        return [coords[a][1] for a, _ in chain]
    r1, r2 = K.gens
    det = Fraction(_cross(r1, r2))
    mapped = sorted(((_cross(p, r2) / det, _cross(r1, p) / det), p) for p in pts)
    front, best = [], None
    for ab, p in mapped:
        if best is None or ab[1] < best:
            front.append((ab, p))
            best = ab[1]
    back = {ab: p for ab, p in front}
    return [back[ab] for ab in _lower_chain([ab for ab, _ in front])]


def poly(points: Iterable[Sequence], rays: Iterable[Sequence] = ()) -> ConlinearElem:
    """conv(points) + cone(rays), canonicalized in the plane."""
    pts = list(dict.fromkeys(tuple(frac(c) for c in p) for p in points))
    if not pts:
        raise PreconditionViolated("a POLY element needs at least one point")
    d = len(pts[0])
    rays = [tuple(frac(c) for c in r) for r in rays]
    if any(len(p) != d for p in pts) or any(len(r) != d for r in rays):
        raise DimensionMismatch("points and rays must share one dimension")
    if d != 2:
        return ConlinearElem(Kind.POLY, tuple(pts), None,
                             tuple(dict.fromkeys(primitive(r) for r in rays if any(r))), canonical=False)
    K = Cone.of(rays)
    if K.kind == "full":
        return FULL
    if K.kind == "halfplane":
        n = K.normal
        a = min(dot(n, p) for p in pts)
        return ConlinearElem(Kind.POLY, (_scale(a / dot(n, n), vec(*n)),), K)
    if K.kind == "line":
        n = primitive(_rot90(K.gens[0]))
        vals = [dot(n, p) for p in pts]
        nn = dot(n, n)
        keep = sorted({_scale(min(vals) / nn, vec(*n)), _scale(max(vals) / nn, vec(*n))})
        return ConlinearElem(Kind.POLY, tuple(keep), K)
    return ConlinearElem(Kind.POLY, tuple(sorted(_vertices_over(pts, K))), K)


def cone_elem(C: Cone) -> ConlinearElem:
    """C itself as an element."""
    return poly([(0, 0)], C.gens)


def halfspace(y: Sequence) -> ConlinearElem:
    """h_y^+ = {z : y·z ≥ 0}."""
    if not any(Fraction(c) for c in y):
        raise ZeroNormal("halfspace normal must be non-zero")
    y = vec(*y)
    if len(y) != 2:
        raise DimensionUnsupported("halfspace elements are only built in the plane")
    return poly([(0, 0)], [_rot90(y), _scale(-1, _rot90(y)), y])


def _require_d2(*elems: ConlinearElem) -> None:
    for A in elems:
        if A.kind is Kind.POLY and not A.canonical:
            raise DimensionUnsupported("set operations need d = 2")


def oplus(A: ConlinearElem, B: ConlinearElem) -> ConlinearElem:
    """A ⊕ B: ∅ absorbs, the plane absorbs every non-empty set, else the Minkowski sum."""
    if A.d is not None and B.d is not None and A.d != B.d:
        raise DimensionMismatch(f"dimensions {A.d} and {B.d}")
    _require_d2(A, B)
    if A.kind is Kind.EMPTY or B.kind is Kind.EMPTY:
        return EMPTY
    if A.kind is Kind.FULL or B.kind is Kind.FULL:
        return FULL
    return poly([_add(p, q) for p in A.points for q in B.points], A.rays + B.rays)


# --- support function and halfspace arithmetic -------------------------------

class Inf(Enum):
    NEG_INFINITY = "-inf"
    POS_INFINITY_EMPTY = "+inf"


NEG_INFINITY = Inf.NEG_INFINITY
POS_INFINITY_EMPTY = Inf.POS_INFINITY_EMPTY


def support_inf(A: ConlinearElem, y: Sequence) -> Fraction | Inf:
    """inf over a ∈ A of y·a, with markers for -∞ and the empty set."""
    y = vec(*y)
    if not any(y):
        raise ZeroNormal("y must be non-zero")
    if A.kind is Kind.EMPTY:
        return POS_INFINITY_EMPTY
    if A.kind is Kind.FULL:
        return NEG_INFINITY
    if any(dot(y, r) < 0 for r in A.rays):
        return NEG_INFINITY
    return min(dot(y, p) for p in A.points)


def _check_normal(y, z, C: Cone | None):
    y, z = vec(*y), vec(*z)
    if not any(y):
        raise ZeroNormal("y must be non-zero")
    if C is not None and not C.in_dual(y):
        raise NormalNotInDualCone(f"y = {y} is not in the dual cone")
    if dot(y, z) != 1:
        raise BadZ(f"y·z must be 1, got {dot(y, z)}")
    return y, z


def translate(y: Sequence, z: Sequence, s) -> ConlinearElem:
    """{s z} + h_y^+."""
    return poly([_scale(frac(s), vec(*z))], halfspace(y).rays)


def halfspace_formula(A: ConlinearElem, y: Sequence, z: Sequence) -> ConlinearElem | tuple:
    """A ⊕ h_y^+ predicted from s = support_inf(A, y) alone.

    In the plane this is an element; for other d it is ("translate", s),
    ("full",) or ("empty",).
    """
    s = support_inf(A, y)
    planar = len(vec(*y)) == 2
    if s is POS_INFINITY_EMPTY:
        return EMPTY if planar else ("empty",)
    if s is NEG_INFINITY:
        return FULL if planar else ("full",)
    return translate(y, z, s) if planar else ("translate", s)


@dataclass(frozen=True)
class HalfspaceResult:
    direct: ConlinearElem
    formula: ConlinearElem
    s: Fraction | Inf
    verdict: bool


def halfspace_oplus(A: ConlinearElem, y: Sequence, z: Sequence, C: Cone | None = None) -> HalfspaceResult:
    """Compute A ⊕ h_y^+ directly and from the support value; compare."""
    y, z = _check_normal(y, z, C)
    direct = oplus(A, halfspace(y))
    formula = halfspace_formula(A, y, z)
    return HalfspaceResult(direct, formula, support_inf(A, y), direct == formula)


def is_idempotent_cone(A: ConlinearElem) -> bool:
    """EMPTY, FULL, or a POLY whose only vertex is the origin."""
    _require_d2(A)
    if A.kind is not Kind.POLY:
        return True
    return A.points == (vec(0, 0),)


# --- H-representation and containment ----------------------------------------

def h_representation(A: ConlinearElem) -> list[tuple[tuple[int, int], Fraction]]:
    """Inequalities (y, c) meaning y·x ≥ c whose intersection is A (a POLY).

    Facet inequalities come from pairs of vertices and from generator rays;
    a facet must be tight on two vertices or on a vertex and a ray parallel
    to it.  One-dimensional sets get cap inequalities along their direction.
    """
    _require_d2(A)
    if A.kind is not Kind.POLY:
        raise PreconditionViolated("only POLY elements have an H-representation")
    K = A.cone
    V = A.points
    if K.kind == "halfplane":
        n = K.normal
        return [(n, dot(n, V[0]))]
    if K.kind == "line":
        n = primitive(_rot90(K.gens[0]))
        vals = [dot(n, p) for p in V]
        return sorted({(n, min(vals)), (tuple(-x for x in n), -max(vals))})
    dirs = [_sub(v, u) for i, u in enumerate(V) for v in V[i + 1:]] + list(K.gens)
    cands = set()
    for e in dirs:
        p = primitive(_rot90(e))
        cands |= {p, tuple(-x for x in p)}
    out = set()
    for y in cands:
        if not K.in_dual(y):
            continue
        c = min(dot(y, v) for v in V)
        tight = sum(1 for v in V if dot(y, v) == c)
        if tight >= 2 or any(dot(y, g) == 0 for g in K.gens):
            out.add((y, c))
    span = [e for e in dirs if any(e)]
    if not span:
        caps = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    elif all(_cross(span[0], e) == 0 for e in span):
        u = primitive(span[0])
        caps = [u, tuple(-x for x in u)]
    else:
        caps = []
    for y in caps:
        if K.in_dual(y):
            out.add((y, min(dot(y, v) for v in V)))
    return sorted(out)


def facet_normals(A: ConlinearElem) -> list[tuple[int, int]]:
    return sorted({y for y, _ in h_representation(A)})


def contains(A: ConlinearElem, B: ConlinearElem) -> bool:
    """A ⊇ B."""
    _require_d2(A, B)
    if B.kind is Kind.EMPTY or A.kind is Kind.FULL:
        return True
    if A.kind is Kind.EMPTY or B.kind is Kind.FULL:
        return False
    H = h_representation(A)
    return (all(dot(y, p) >= c for y, c in H for p in B.points)
            and all(dot(y, r) >= 0 for y, _ in H for r in B.rays))


def from_h_representation(ineqs: Iterable[tuple[Sequence, Fraction]]) -> ConlinearElem:
    """{x : y·x ≥ c for every (y, c)} in the plane."""
    H = [(vec(*y), frac(c)) for y, c in ineqs]
    if not H:
        return FULL
    if any(not any(y) for y, _ in H):
        raise ZeroNormal("inequality with zero normal")
    n0 = H[0][0]
    if all(_cross(n0, y) == 0 for y, _ in H):
        n = vec(*primitive(n0))
        lo, hi = None, None
        for y, c in H:
            lam = dot(y, n) / dot(n, n)
            if lam > 0:
                lo = c / lam if lo is None else max(lo, c / lam)
            else:
                hi = c / lam if hi is None else min(hi, c / lam)
        if lo is not None and hi is not None and lo > hi:
            return EMPTY
        nn = dot(n, n)
        line = _rot90(n)
        if hi is None:
            return poly([_scale(lo / nn, n)], [line, _scale(-1, line), n])
        if lo is None:
            return poly([_scale(hi / nn, n)], [line, _scale(-1, line), _scale(-1, n)])
        return poly([_scale(lo / nn, n), _scale(hi / nn, n)], [line, _scale(-1, line)])

    def feasible(x):
        return all(dot(y, x) >= c for y, c in H)

    pts = []
    for i, (a, ca) in enumerate(H):
        for b, cb in H[i + 1:]:
            det = _cross(a, b)
            if det == 0:
                continue
            x = ((ca * b[1] - a[1] * cb) / det, (a[0] * cb - ca * b[0]) / det)
            if feasible(x):
                pts.append(x)
    if not pts:
        return EMPTY
    rays = []
    for y, _ in H:
        for r in (_rot90(y), _scale(-1, _rot90(y))):
            if all(dot(w, r) >= 0 for w, _ in H):
                rays.append(r)
    return poly(pts, rays)


def rees_superset(E1: ConlinearElem, E2: ConlinearElem) -> bool:
    """E1 ⊇ E2 for non-empty idempotent elements."""
    for E in (E1, E2):
        if E.kind is Kind.EMPTY:
            raise PreconditionViolated("rees_superset needs non-empty elements")
        if not is_idempotent_cone(E):
            raise NotIdempotent(f"{E} is not a cone")
    return contains(E1, E2)


# --- materialization ---------------------------------------------------------

@dataclass(frozen=True)
class Materialized:
    semigroup: FiniteSemigroup
    elements: tuple[ConlinearElem, ...]

    def index_of(self, A: ConlinearElem) -> int:
        return self.elements.index(A)


def default_label(A: ConlinearElem, C: Cone | None = None, i: int = 0) -> str:
    if A.kind is Kind.EMPTY:
        return "∅̂"
    if A.kind is Kind.FULL:
        return "R̂²"
    if C is not None and A == cone_elem(C):
        return "C"
    if A.cone is not None and A.cone.kind == "halfplane" and is_idempotent_cone(A):
        return "h({},{})".format(*A.cone.normal)
    return f"x{i}"


def materialize(elems: Sequence[ConlinearElem], labels: Sequence[str] | None = None,
                C: Cone | None = None) -> Materialized:
    """Cayley table of ⊕ on a list closed under ⊕ (NotClosed names a witness pair)."""
    elems = tuple(elems)
    _require_d2(*elems)
    if len(set(elems)) != len(elems):
        raise PreconditionViolated("elements must be pairwise distinct sets")
    where = {A: i for i, A in enumerate(elems)}
    table = []
    for i, A in enumerate(elems):
        row = []
        for j, B in enumerate(elems):
            k = where.get(oplus(A, B))
            if k is None:
                raise NotClosed(i, j)
            row.append(k)
        table.append(row)
    if labels is None:
        labels = [default_label(A, C, i) for i, A in enumerate(elems)]
    return Materialized(validate_table(table, list(labels)), elems)


# --- group and duality checks ------------------------------------------------

@dataclass
class Verdict:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)


def translate_group_check(y: Sequence, z: Sequence, samples: Iterable, C: Cone | None = None) -> Verdict:
    """Translates {s z} + h_y^+ add like their offsets s: sum, neutral h_y^+, inverse -s."""
    y, z = _check_normal(y, z, C)
    samples = [frac(s) for s in samples]
    h = halfspace(y)
    fails, checked = [], 0
    for s in samples:
        checked += 2
        if translate(y, z, 0) != h:
            fails.append(("identity", s))
        if oplus(translate(y, z, s), translate(y, z, -s)) != h:
            fails.append(("inverse", s))
        for t in samples:
            checked += 1
            if oplus(translate(y, z, s), translate(y, z, t)) != translate(y, z, s + t):
                fails.append(("sum", s, t))
    return Verdict(not fails, checked, fails)


@dataclass(frozen=True)
class DualityResult:
    normals: tuple
    reconstruction: ConlinearElem
    verdict: bool


def duality_reconstruct(A: ConlinearElem) -> DualityResult:
    """Intersect A ⊕ h_y^+ over the facet normals y of A and compare with A.

    The intersection is assembled from the translates {s_y z_y} + h_y^+, i.e.
    the inequalities y·x ≥ s_y with z_y = y / |y|².
    """
    if A.kind is Kind.POLY and A.d != 2:
        raise DimensionUnsupported("duality reconstruction needs d = 2")
    if A.kind is not Kind.POLY:
        raise PreconditionViolated("duality reconstruction needs a POLY element")
    normals = tuple(facet_normals(A))
    ineqs = []
    for y in normals:
        yv = vec(*y)
        piece = halfspace_formula(A, yv, _scale(1 / dot(yv, yv), yv))
        ineqs += h_representation(piece)
    rec = from_h_representation(ineqs)
    return DualityResult(normals, rec, rec == A)


def halfspace_order_is_total(elems: Sequence[ConlinearElem], y: Sequence, z: Sequence) -> bool:
    """A ≤ B iff A ⊕ h_y^+ ⊇ B ⊕ h_y^+ compares every pair."""
    images = [halfspace_formula(A, y, z) for A in elems]
    return all(contains(P, Q) or contains(Q, P) for P in images for Q in images)


# --- instances and random generation -----------------------------------------

@dataclass
class Instance:
    C: Cone
    elements: list[ConlinearElem]
    names: list[str | None]
    d: int = 2

    def labels(self) -> list[str]:
        return [nm or default_label(A, self.C, i) for i, (A, nm) in enumerate(zip(self.elements, self.names))]

    def materialize(self) -> Materialized:
        return materialize(self.elements, self.labels(), self.C)


def _fmt(x: Fraction) -> str | int:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def elem_to_json(A: ConlinearElem) -> dict:
    if A.kind is not Kind.POLY:
        return {"kind": A.kind.value}
    return {"kind": "poly",
            "points": [[_fmt(c) for c in p] for p in A.points],
            "rays": [list(r) for r in A.rays]}


def elem_from_json(obj: dict, C: Cone) -> ConlinearElem:
    kind = obj.get("kind")
    if kind == "empty":
        return EMPTY
    if kind == "full":
        return FULL
    if kind == "poly":
        return poly(obj["points"], list(obj.get("rays", [])) + list(C.gens))
    raise PreconditionViolated(f"unknown element kind {kind!r}")


def load_instance(text: str) -> Instance:
    obj = json.loads(text)
    d = obj.get("d", 2)
    if d != 2:
        raise DimensionUnsupported(f"instances are planar, got d = {d}")
    C = Cone.of(obj["C"]["rays"])
    if C.kind == "zero":
        raise PreconditionViolated("C must contain a non-zero ray")
    items = obj.get("elements", [])
    return Instance(C, [elem_from_json(e, C) for e in items], [e.get("name") for e in items])


def dump_instance(inst: Instance) -> str:
    items = []
    for A, nm in zip(inst.elements, inst.names):
        e = elem_to_json(A)
        if nm:
            e["name"] = nm
        items.append(e)
    return json.dumps({"d": 2, "C": {"rays": [list(g) for g in inst.C.gens]}, "elements": items},
                      ensure_ascii=False)


def five_cone_instance() -> Instance:
    """{∅, ℝ², C, h_(1,0)^+, h_(0,1)^+} with C the positive quadrant."""
    C = POSITIVE_QUADRANT
    elems = [EMPTY, FULL, cone_elem(C), halfspace((1, 0)), halfspace((0, 1))]
    return Instance(C, elems, ["∅̂", "R̂²", "C", "h1", "h2"])


def _rand_frac(rng: np.random.Generator, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, 4)))


def random_cone(rng: np.random.Generator) -> Cone:
    """A pointed cone with two small primitive generators."""
    while True:
        r1 = (int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
        r2 = (int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
        if _cross(r1, r2) != 0:
            return Cone.of([r1, r2])


def random_poly(rng: np.random.Generator, C: Cone, extra_ray_prob: float = 0.2) -> ConlinearElem:
    pts = [(_rand_frac(rng), _rand_frac(rng)) for _ in range(int(rng.integers(1, 5)))]
    rays = list(C.gens)
    if rng.random() < extra_ray_prob:
        rays.append((int(rng.integers(-3, 4)), int(rng.integers(-3, 4))))
    return poly(pts, rays)


def dual_generators(C: Cone) -> list[tuple[int, int]]:
    """Generators of C^+ = {y : y·c ≥ 0 for c in C}."""
    def neg(v):
        return tuple(-x for x in v)
    if C.kind == "pointed":
        r1, r2 = C.gens
        return [primitive(_rot90(r1)), neg(primitive(_rot90(r2)))]
    if C.kind == "ray":
        p = primitive(_rot90(C.gens[0]))
        return [p, neg(p), C.gens[0]]
    if C.kind == "line":
        p = primitive(_rot90(C.gens[0]))
        return [p, neg(p)]
    if C.kind == "halfplane":
        return [C.normal]
    if C.kind == "zero":
        return list(FULL_GENS)
    return []


def random_dual_normal(rng: np.random.Generator, C: Cone) -> tuple[Fraction, Fraction]:
    """A non-zero y in C^+ as a non-negative combination of dual generators."""
    duals = dual_generators(C)
    if not duals:
        raise NormalNotInDualCone("the dual of the full plane is {0}")
    while True:
        w = [int(rng.integers(0, 4)) for _ in duals]
        y = tuple(Fraction(sum(wi * g[k] for wi, g in zip(w, duals))) for k in range(2))
        if any(y):
            return y


def random_z(rng: np.random.Generator, y: Sequence) -> tuple[Fraction, Fraction]:
    """Some z with y·z = 1."""
    y = vec(*y)
    base = _scale(1 / dot(y, y), y)
    return _add(base, _scale(_rand_frac(rng, -2, 2), _rot90(y)))
