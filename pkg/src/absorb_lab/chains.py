"""Countable idempotent chains, optionally topped by two incomparable idempotents.

A :class:`ChainSemigroup` is a finite stack of blocks, listed from the
Rees-least block upwards.  Each block is

* ``FIN(m)``     - m elements,
* ``OMEGA``      - order type ω: a least element and no greatest,
* ``OMEGA_STAR`` - order type ω*: a greatest element and no least.

Chain elements add by taking the Rees-smaller one.  The optional twin-top
gadget adds idempotents ``E`` and ``F`` above the whole chain, with
``E + F = F + E`` equal to the greatest element of the top block, and
``g + x = x + g = x`` for a gadget element g and a chain element x.

Addresses are ``(block, offset)``.  Offsets count from the block's existing
endpoint: from the bottom for FIN and OMEGA, from the top for OMEGA_STAR.

Closed forms (every chain element is idempotent; Rees order is the chain
order, gadget elements sit above the chain and are mutually incomparable):

* E^≤(x) for a chain element x is the set of chain elements at or below x,
  always a chain.  E^≤(E) is the chain plus E, also a chain.  So E^lin = W.
* A chain element x absorbs everything outside E^≤(x), so all chain elements
  are quasi-absorbing.  E is not: F + E is the top chain element, not E.
  Hence A(W) = chain part with a gadget, and W without one.
* x ∈ A_fin iff E^≤(x) is finite: every block strictly below x is FIN and
  x's own block is FIN or OMEGA (an OMEGA_STAR element has infinitely many
  predecessors).
* P(A) for a downset A: the least chain element outside A if the chain part
  of W \\ A is non-empty and has one; nothing if it has no least element; and
  the gadget elements outside A once A contains the whole chain.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

import numpy as np

from .core import FiniteSemigroup, validate_table
from .errors import BadK, ChainSpecError

GADGET = ("E", "F")
Elem = Union[tuple[int, int], str]


class BlockKind(Enum):
    FIN = "fin"
    OMEGA = "omega"
    OMEGA_STAR = "omega_star"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    size: int | None = None

    def __post_init__(self):
        if self.kind is BlockKind.FIN:
            if self.size is None or self.size < 1:
                raise ChainSpecError("FIN blocks need a size >= 1")
        elif self.size is not None:
            raise ChainSpecError(f"{self.kind.value} blocks take no size")

    @property
    def has_least(self) -> bool:
        return self.kind is not BlockKind.OMEGA_STAR

    @property
    def has_greatest(self) -> bool:
        return self.kind is not BlockKind.OMEGA

    @property
    def finite(self) -> bool:
        return self.kind is BlockKind.FIN

    def __str__(self) -> str:
        return f"fin:{self.size}" if self.finite else self.kind.value


FIN = lambda m: Block(BlockKind.FIN, m)  # noqa: E731
OMEGA = Block(BlockKind.OMEGA)
OMEGA_STAR = Block(BlockKind.OMEGA_STAR)


@dataclass(frozen=True)
class ChainSemigroup:
    blocks: tuple[Block, ...]
    gadget: bool = False

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not self.blocks:
            raise ChainSpecError("a chain needs at least one block")
        if self.gadget and not self.blocks[-1].has_greatest:
            raise ChainSpecError("the twin-top gadget needs a top block with a greatest element")

    # -- elements -------------------------------------------------------

    def is_element(self, x: Elem) -> bool:
        if isinstance(x, str):
            return self.gadget and x in GADGET
        b, off = x
        if not 0 <= b < len(self.blocks) or off < 0:
            return False
        blk = self.blocks[b]
        return not blk.finite or off < blk.size

    def _key(self, x: tuple[int, int]) -> tuple[int, int]:
        b, off = x
        return (b, -off) if self.blocks[b].kind is BlockKind.OMEGA_STAR else (b, off)

    def top(self) -> tuple[int, int]:
        """Greatest element of the top block (requires one to exist)."""
        b = len(self.blocks) - 1
        blk = self.blocks[b]
        if not blk.has_greatest:
            raise ChainSpecError("top block has no greatest element")
        return (b, blk.size - 1) if blk.finite else (b, 0)

    def add(self, x: Elem, y: Elem) -> Elem:
        if isinstance(x, str) and isinstance(y, str):
            return x if x == y else self.top()
        if isinstance(x, str):
            return y
        if isinstance(y, str):
            return x
        return x if self._key(x) <= self._key(y) else y

    def rees_leq(self, x: Elem, y: Elem) -> bool:
        return self.add(x, y) == x and self.add(y, x) == x

    # -- finite windows -------------------------------------------------

    def truncation_elements(self, k: int) -> list[Elem]:
        """Elements kept by :func:`truncate`, Rees-least first."""
        if k < 1:
            raise BadK(f"k must be >= 1, got {k}")
        out: list[Elem] = []
        for b, blk in enumerate(self.blocks):
            if blk.finite:
                out += [(b, i) for i in range(blk.size)]
            elif blk.kind is BlockKind.OMEGA:
                out += [(b, i) for i in range(k)]
            else:
                out += [(b, i) for i in reversed(range(k))]
        if self.gadget:
            out += list(GADGET)
        return out

    def label(self, x: Elem) -> str:
        if isinstance(x, str):
            return x
        b, off = x
        if self.blocks[b].kind is BlockKind.OMEGA_STAR:
            return f"b{b}[-{off + 1}]"
        return f"b{b}[{off}]"

    # -- spec formats ---------------------------------------------------

    def to_text(self) -> str:
        text = "blocks = [" + ", ".join(str(b) for b in self.blocks) + "]"
        if self.gadget:
            text += "; gadget = twin_top"
        return text

    def to_json(self) -> str:
        return json.dumps({"blocks": [str(b) for b in self.blocks],
                           "gadget": "twin_top" if self.gadget else None})

    def __str__(self) -> str:
        return self.to_text()


def _parse_block(tok: str) -> Block:
    tok = tok.strip().lower()
    if tok == "omega":
        return OMEGA
    if tok in ("omega_star", "omega*"):
        return OMEGA_STAR
    m = re.fullmatch(r"fin\s*:\s*(\d+)", tok)
    if m:
        return FIN(int(m.group(1)))
    raise ChainSpecError(f"unknown block {tok!r}")


def _parse_gadget(value) -> bool:
    if value in (None, "none", "null", ""):
        return False
    if value == "twin_top":
        return True
    raise ChainSpecError(f"unknown gadget {value!r}")


def parse_chain_spec(text: str) -> ChainSemigroup:
    """Parse ``blocks = [omega_star, fin:3]; gadget = twin_top`` or the JSON mirror."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
            blocks = [_parse_block(b) for b in obj["blocks"]]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ChainSpecError(f"bad chain JSON: {exc}") from None
        return ChainSemigroup(tuple(blocks), _parse_gadget(obj.get("gadget")))
    fields = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise ChainSpecError(f"expected key = value, got {part.strip()!r}")
        fields[key.strip()] = value.strip()
    if "blocks" not in fields or set(fields) - {"blocks", "gadget"}:
        raise ChainSpecError("chain spec needs 'blocks' and optionally 'gadget'")
    body = fields["blocks"]
    if not (body.startswith("[") and body.endswith("]")):
        raise ChainSpecError("blocks must be a bracketed list")
    blocks = [_parse_block(t) for t in body[1:-1].split(",") if t.strip()]
    return ChainSemigroup(tuple(blocks), _parse_gadget(fields.get("gadget")))


# --- symbolic sets -----------------------------------------------------------

WHOLE = "all"


@dataclass(frozen=True)
class SymbolicSet:
    """A subset of a chain semigroup in normal form.

    ``parts[b]`` is ``"all"`` (the whole block) or a frozenset of offsets
    (finite, possibly empty); FIN blocks that are fully covered are always
    stored as ``"all"`` so equal sets compare equal.
    """

    chain: ChainSemigroup
    parts: tuple
    gadget: frozenset = field(default_factory=frozenset)

    @classmethod
    def build(cls, C: ChainSemigroup, parts: dict | None = None, gadget: Iterable[str] = ()) -> "SymbolicSet":
        parts = parts or {}
        norm = []
        for b, blk in enumerate(C.blocks):
            p = parts.get(b, frozenset())
            if p != WHOLE:
                p = frozenset(p)
                if any(not C.is_element((b, o)) for o in p):
                    raise ChainSpecError(f"offsets {sorted(p)} out of range for block {b}")
                if blk.finite and len(p) == blk.size:
                    p = WHOLE
            norm.append(p)
        gadget = frozenset(gadget)
        if gadget and (not C.gadget or not gadget <= set(GADGET)):
            raise ChainSpecError(f"no gadget elements {sorted(gadget)} in this chain")
        return cls(C, tuple(norm), gadget)

    @classmethod
    def empty(cls, C: ChainSemigroup) -> "SymbolicSet":
        return cls.build(C)

    @classmethod
    def all(cls, C: ChainSemigroup) -> "SymbolicSet":
        return cls.build(C, {b: WHOLE for b in range(len(C.blocks))}, GADGET if C.gadget else ())

    @classmethod
    def chain_part(cls, C: ChainSemigroup) -> "SymbolicSet":
        return cls.build(C, {b: WHOLE for b in range(len(C.blocks))})

    def __contains__(self, x: Elem) -> bool:
        if not self.chain.is_element(x):
            return False
        if isinstance(x, str):
            return x in self.gadget
        p = self.parts[x[0]]
        return p == WHOLE or x[1] in p

    def is_empty(self) -> bool:
        return not self.gadget and all(p != WHOLE and not p for p in self.parts)

    def is_all(self) -> bool:
        return self == SymbolicSet.all(self.chain)

    def _combine(self, other: "SymbolicSet", op: str) -> "SymbolicSet":
        if other.chain != self.chain:
            raise ValueError("symbolic sets belong to different chains")
        parts = {}
        for b, (p, q) in enumerate(zip(self.parts, other.parts)):
            if op == "or":
                parts[b] = WHOLE if WHOLE in (p, q) else p | q
            elif p == WHOLE:
                parts[b] = q
            elif q == WHOLE:
                parts[b] = p
            else:
                parts[b] = p & q
        g = self.gadget | other.gadget if op == "or" else self.gadget & other.gadget
        return SymbolicSet.build(self.chain, parts, g)

    def __or__(self, other: "SymbolicSet") -> "SymbolicSet":
        return self._combine(other, "or")

    def __and__(self, other: "SymbolicSet") -> "SymbolicSet":
        return self._combine(other, "and")

    def __le__(self, other: "SymbolicSet") -> bool:
        if not self.gadget <= other.gadget:
            return False
        for p, q in zip(self.parts, other.parts):
            if q == WHOLE:
                continue
            if p == WHOLE or not p <= q:
                return False
        return True

    def __lt__(self, other: "SymbolicSet") -> bool:
        return self <= other and self != other

    def elements(self) -> list[Elem]:
        """Explicit members; only valid when no infinite block is fully included."""
        out: list[Elem] = []
        for b, p in enumerate(self.parts):
            if p == WHOLE:
                blk = self.chain.blocks[b]
                if not blk.finite:
                    raise ValueError(f"block {b} is infinite")
                out += [(b, i) for i in range(blk.size)]
            else:
                out += [(b, o) for o in sorted(p)]
        return out + sorted(self.gadget)

    def project(self, k: int) -> list[int]:
        """Indices, in ``truncate(C, k)``, of the members kept by the truncation."""
        return [i for i, x in enumerate(self.chain.truncation_elements(k)) if x in self]

    def describe(self) -> str:
        if self.is_empty():
            return "EMPTY"
        if self.is_all():
            return "ALL"
        items = []
        for b, p in enumerate(self.parts):
            if p == WHOLE:
                items.append(f"b{b}:{self.chain.blocks[b]}")
            else:
                items += [self.chain.label((b, o)) for o in sorted(p)]
        items += sorted(self.gadget)
        return "{" + ", ".join(items) + "}"

    def __str__(self) -> str:
        return self.describe()


# --- closed forms ------------------------------------------------------------

def symbolic_e_lin(C: ChainSemigroup) -> SymbolicSet:
    return SymbolicSet.all(C)


def symbolic_a_w(C: ChainSemigroup) -> SymbolicSet:
    """Quasi-absorbing elements: the whole chain part; gadget elements never qualify."""
    return SymbolicSet.chain_part(C)


def symbolic_a_fin(C: ChainSemigroup) -> SymbolicSet:
    """Elements with finitely many Rees-predecessors, read off the block list."""
    parts = {}
    for b, blk in enumerate(C.blocks):
        if blk.kind is BlockKind.OMEGA_STAR:
            break
        parts[b] = WHOLE
        if not blk.finite:
            break
    return SymbolicSet.build(C, parts)


def symbolic_a_s(C: ChainSemigroup) -> SymbolicSet:
    """Simulate the peeling procedure on the symbolic chain.

    Each stage takes the Rees-least remaining element and keeps it only if it
    absorbs the remainder (checked with :meth:`ChainSemigroup.add` against one
    representative of every remaining block and the gadget).  Entering an
    OMEGA block, the remainder after each removal is order-isomorphic to the
    one before, so every element of the block is removed at some finite stage
    and nothing above it ever is.
    """
    parts: dict[int, object] = {}
    gadget_removed: set[str] = set()
    b, pos = 0, 0
    nb = len(C.blocks)
    while True:
        if b == nb:
            rest = [g for g in (GADGET if C.gadget else ()) if g not in gadget_removed]
            stage = [a for a in rest if all(C.add(w, a) == a == C.add(a, w) for w in rest)]
            if not stage:
                break
            gadget_removed.update(stage)
            continue
        blk = C.blocks[b]
        if not blk.has_least:
            break
        least = (b, pos)
        reps: list[Elem] = []
        if C.is_element((b, pos + 1)):
            reps.append((b, pos + 1))
        reps += [(c, 0) for c in range(b + 1, nb)]
        reps += [g for g in (GADGET if C.gadget else ()) if g not in gadget_removed]
        if not all(C.add(w, least) == least == C.add(least, w) for w in reps):
            break
        if blk.kind is BlockKind.OMEGA:
            parts[b] = WHOLE
            break
        parts.setdefault(b, set()).add(pos)
        pos += 1
        if pos == blk.size:
            parts[b] = WHOLE
            b, pos = b + 1, 0
    return SymbolicSet.build(C, parts, gadget_removed)


def _is_downset(C: ChainSemigroup, A: SymbolicSet) -> bool:
    seen_gap = False
    for b, blk in enumerate(C.blocks):
        p = A.parts[b]
        if p == WHOLE:
            if seen_gap:
                return False
            continue
        if p:
            if seen_gap or blk.kind is BlockKind.OMEGA_STAR or p != frozenset(range(len(p))):
                return False
        seen_gap = True
    if A.gadget and seen_gap:
        return False
    return True


def symbolic_primitives(C: ChainSemigroup, which: str | SymbolicSet) -> SymbolicSet:
    """P(A) for A = A_fin ("AFIN"), A = A(W) ("AW"), or an explicit downset."""
    if isinstance(which, SymbolicSet):
        A = which
    elif which.upper() == "AFIN":
        A = symbolic_a_fin(C)
    elif which.upper() == "AW":
        A = symbolic_a_w(C)
    else:
        raise ChainSpecError(f"which must be AFIN, AW or a SymbolicSet, got {which!r}")
    if not _is_downset(C, A):
        raise ChainSpecError(f"{A} is not an ideal of the chain")
    for b, blk in enumerate(C.blocks):
        p = A.parts[b]
        if p == WHOLE:
            continue
        if not blk.has_least:
            return SymbolicSet.empty(C)
        return SymbolicSet.build(C, {b: {len(p)}})
    gadget = [g for g in (GADGET if C.gadget else ()) if g not in A.gadget]
    return SymbolicSet.build(C, {}, gadget)


# --- truncations and cross-checks ---------------------------------------------

def truncate(C: ChainSemigroup, k: int) -> FiniteSemigroup:
    """Finite window: FIN blocks whole, the k elements of each infinite block
    nearest its endpoint, and the gadget.  Indexed Rees-least first."""
    elems = C.truncation_elements(k)
    index = {x: i for i, x in enumerate(elems)}
    raw = [[index[C.add(x, y)] for y in elems] for x in elems]
    return validate_table(raw, [C.label(x) for x in elems])


AGREE = "AGREE"
EXPECTED_DIVERGENCE = "EXPECTED_DIVERGENCE"
FAIL = "FAIL"
NOT_APPLICABLE = "N/A"


@dataclass
class CrossCheckItem:
    name: str
    status: str
    symbolic: str = ""
    finite: list = field(default_factory=list)
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "symbolic": self.symbolic,
                "finite": self.finite, "detail": self.detail}


@dataclass
class CrossCheckReport:
    chain: ChainSemigroup
    k: int
    items: list[CrossCheckItem]

    @property
    def ok(self) -> bool:
        return all(it.status != FAIL for it in self.items)

    def status(self, name: str) -> str:
        return next(it.status for it in self.items if it.name == name)

    def to_json(self) -> dict:
        return {"chain": self.chain.to_text(), "k": self.k, "items": [it.to_json() for it in self.items]}


def cross_check(C: ChainSemigroup, k: int) -> CrossCheckReport:
    """Compare symbolic answers with the finite analyzer on ``truncate(C, k)``.

    A truncation cuts every OMEGA_STAR block to a finite piece with a least
    element, which the infinite chain does not have; where that changes the
    answer for A_s / A_fin the item is reported as EXPECTED_DIVERGENCE.
    """
    from .quasi import a_fin, a_w, e_lin, primitives, stepwise_quasi_absorbing
    from .suite import verify_theorem_suite

    T = truncate(C, k)
    elems = C.truncation_elements(k)
    items: list[CrossCheckItem] = []
    infinite = any(not b.finite for b in C.blocks)

    def compare(name: str, sym: SymbolicSet, fin, may_diverge: bool):
        proj = sym.project(k)
        got = fin.to_list()
        if proj == got:
            status = AGREE
        elif may_diverge and infinite:
            status = EXPECTED_DIVERGENCE
        else:
            status = FAIL
        items.append(CrossCheckItem(name, status, sym.describe(), T.labels_of(fin)))

    gidx = [i for i, x in enumerate(elems) if isinstance(x, str)]
    if C.gadget:
        chain_ideal = T.elems(i for i, x in enumerate(elems) if not isinstance(x, str))
        fin_p = primitives(T, chain_ideal)
        sym_p = symbolic_primitives(C, "AW")
        ok = fin_p.to_list() == gidx and sym_p == SymbolicSet.build(C, {}, GADGET)
        items.append(CrossCheckItem("primitives_of_chain_ideal", AGREE if ok else FAIL,
                                    sym_p.describe(), T.labels_of(fin_p)))
        lin = e_lin(T)
        ok = all(i in lin for i in gidx) and all(g in symbolic_e_lin(C) for g in GADGET)
        items.append(CrossCheckItem("gadget_in_E_lin", AGREE if ok else FAIL, "E, F",
                                    [T.label(i) for i in gidx if i in lin]))
    else:
        items.append(CrossCheckItem("primitives_of_chain_ideal", NOT_APPLICABLE, detail="no gadget"))
        items.append(CrossCheckItem("gadget_in_E_lin", NOT_APPLICABLE, detail="no gadget"))

    a_s, _ = stepwise_quasi_absorbing(T)
    compare("A_s", symbolic_a_s(C), a_s, may_diverge=True)
    compare("A_fin", symbolic_a_fin(C), a_fin(T), may_diverge=True)
    aw = a_w(T)
    compare("A", symbolic_a_w(C), aw, may_diverge=False)
    compare("P(A)", symbolic_primitives(C, "AW"), primitives(T, aw), may_diverge=False)

    suite = verify_theorem_suite(T)
    items.append(CrossCheckItem("finite_theorem_suite", AGREE if suite.passed else FAIL,
                                detail=", ".join(r.name for r in suite.failures())))
    return CrossCheckReport(C, k, items)


# --- presets and random specs ------------------------------------------------

PRESETS = {
    # (N, max): Rees order reverses the numeric order, top element 0
    "nat_max": ChainSemigroup((OMEGA_STAR,)),
    # {1+1/n} (Rees-bottom, omega) below {1-1/n} (omega*), under max
    "two_omega": ChainSemigroup((OMEGA, OMEGA_STAR)),
    # D = {1/n} under min with the e, f gadget
    "ef_gadget": ChainSemigroup((OMEGA_STAR,), gadget=True),
    # D1 = {1-1/n} below D2 = {2-1/n}, under min
    "d1_d2": ChainSemigroup((OMEGA, OMEGA)),
}


def random_chain_spec(rng: np.random.Generator, max_blocks: int = 4) -> ChainSemigroup:
    nb = int(rng.integers(1, max_blocks + 1))
    blocks = []
    for _ in range(nb):
        kind = int(rng.integers(0, 3))
        blocks.append(FIN(int(rng.integers(1, 4))) if kind == 0 else (OMEGA if kind == 1 else OMEGA_STAR))
    gadget = blocks[-1].has_greatest and bool(rng.integers(0, 2))
    return ChainSemigroup(tuple(blocks), gadget)
