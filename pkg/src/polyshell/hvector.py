"""f-vector / h-vector transforms and bounded witness searches.

Vectors are coefficient lists in descending powers: for ``v`` of length
``d + 1`` the polynomial is ``sum(v[i] * y**(d - i))``.  The h-vector is
defined by ``H(y) = F(y - 1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .errors import DomainError, SizeError
from .monomials import DegreeVector, OrderIdeal, degree_sequence, lower_covers, monomials_of_degree, one
from .polymatroid import is_discrete_polymatroid
from .shelling import ORACLE_CAP, MShelling, is_m_shellable_bruteforce

log = logging.getLogger(__name__)

FOUND, ABSENT, INCONCLUSIVE = "found", "absent", "inconclusive"


def _vector(v: Sequence[int]) -> DegreeVector:
    v = tuple(v)
    if not v:
        raise DomainError("empty vector")
    if any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise DomainError(f"vector entries must be integers, got {list(v)!r}")
    return v


def f_to_h(f: Sequence[int]) -> DegreeVector:
    """h-vector of a complex with f-vector ``f`` (``f[0]`` counts the empty face)."""
    f = _vector(f)
    if f[0] != 1:
        raise DomainError(f"f[0] must be 1 (the empty face), got {f[0]}")
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )


def h_to_f(h: Sequence[int]) -> DegreeVector:
    h = _vector(h)
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def evaluate(v: Sequence[int], y: int) -> int:
    """Evaluate the descending-power polynomial with coefficients ``v`` at ``y``."""
    acc = 0
    for c in v:
        acc = acc * y + c
    return acc


# -- witness searches ---------------------------------------------------------


@dataclass(frozen=True)
class SearchBounds:
    max_variables: int = 8
    max_nodes: int = 1_000_000

    def __post_init__(self):
        if self.max_variables < 1 or self.max_nodes < 1:
            raise DomainError("search bounds must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a witness search.

    ``status`` is ``"found"``, ``"absent"`` (the bounded search completed
    with no witness) or ``"inconclusive"`` (a budget or cap cut it short).
    """

    status: str
    witness: OrderIdeal | None = None
    shelling: MShelling | None = None
    nodes: int = 0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        doc = {
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json(),
            "nodes": self.nodes,
        }
        if self.shelling is not None:
            doc["shelling"] = self.shelling.to_json()
        if self.reason:
            doc["reason"] = self.reason
        return doc


class _OutOfNodes(Exception):
    pass


def _search(
    h: Sequence[int],
    bounds: SearchBounds,
    accept: Callable[[OrderIdeal], tuple[bool, MShelling | None]],
) -> SearchOutcome:
    h = _vector(h)
    if h[0] != 1:
        return SearchOutcome(ABSENT, reason="h[0] must be 1")
    if any(x < 0 for x in h):
        return SearchOutcome(ABSENT, reason="negative entry")
    # trailing zeros do not change which ideals realise h
    while len(h) > 1 and h[-1] == 0:
        h = h[:-1]
    d = len(h) - 1
    if d == 0:
        g = OrderIdeal.from_members(1, [one(1)])
        ok, shelling = accept(g)
        return SearchOutcome(FOUND if ok else ABSENT, g if ok else None, shelling, nodes=1)
    n = h[1]
    if n == 0:
        return SearchOutcome(ABSENT, reason="h[1] = 0 but a higher entry is nonzero")
    if n > bounds.max_variables:
        return SearchOutcome(INCONCLUSIVE, reason=f"needs {n} variables, bound is {bounds.max_variables}")

    pool = monomials_of_degree(n, d)
    need = h[d]
    counts = [0] * (d + 1)
    members: set = set()
    nodes = 0
    skipped = False

    def add(g) -> list:
        # add the divisors of g not yet present, walking down from g
        fresh = []
        stack = [g]
        while stack:
            m = stack.pop()
            if m in members:
                continue
            members.add(m)
            fresh.append(m)
            counts[sum(m)] += 1
            stack.extend(lower_covers(m))
        return fresh

    def undo(fresh) -> None:
        for m in fresh:
            members.discard(m)
            counts[sum(m)] -= 1

    def rec(start: int, chosen: int):
        nonlocal nodes, skipped
        nodes += 1
        if nodes > bounds.max_nodes:
            raise _OutOfNodes
        if chosen == need:
            if list(counts) != list(h):
                return None
            g = OrderIdeal.from_members(n, members, check=False)
            try:
                ok, shelling = accept(g)
            except SizeError:
                skipped = True
                return None
            return (g, shelling) if ok else None
        for idx in range(start, len(pool) - (need - chosen) + 1):
            fresh = add(pool[idx])
            if all(c <= t for c, t in zip(counts, h)):
                hit = rec(idx + 1, chosen + 1)
                if hit is not None:
                    return hit
            undo(fresh)
        return None

    try:
        hit = rec(0, 0)
    except _OutOfNodes:
        return SearchOutcome(INCONCLUSIVE, nodes=nodes, reason=f"node budget {bounds.max_nodes} exhausted")
    if hit is not None:
        return SearchOutcome(FOUND, hit[0], hit[1], nodes=nodes)
    if skipped:
        return SearchOutcome(INCONCLUSIVE, nodes=nodes, reason="some candidates exceeded the oracle cap")
    return SearchOutcome(ABSENT, nodes=nodes)


def find_pure_order_ideal_witness(h: Sequence[int], bounds: SearchBounds = SearchBounds()) -> SearchOutcome:
    """Search for a pure order ideal whose degree sequence is ``h``.

    Generators are sets of ``h[-1]`` monomials of top degree on ``h[1]``
    variables, explored in graded-lex order with pruning whenever some
    degree is already over-full.
    """
    return _search(h, bounds, lambda g: (True, None))


def find_pm_witness(h: Sequence[int], bounds: SearchBounds = SearchBounds()) -> SearchOutcome:
    """Like :func:`find_pure_order_ideal_witness`, restricted to discrete polymatroids."""
    return _search(h, bounds, lambda g: (is_discrete_polymatroid(g).holds, None))


def find_shellable_witness(
    h: Sequence[int], bounds: SearchBounds = SearchBounds(), oracle_cap: int = ORACLE_CAP
) -> SearchOutcome:
    """Search for an M-shellable pure ideal realising ``h``; the outcome carries its shelling."""

    def accept(g):
        s = is_m_shellable_bruteforce(g, cap=oracle_cap)
        return s is not None, s

    return _search(h, bounds, accept)


def degree_sequence_matches(g: OrderIdeal, h: Sequence[int]) -> bool:
    """Compare ignoring trailing zeros of ``h``."""
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return list(degree_sequence(g)) == h
