"""The discrete polymatroid exchange test and exhaustive small-case enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, SizeError
from .monomials import (
    Monomial,
    OrderIdeal,
    degree,
    ideal_from_generators,
    monomials_of_degree,
)

#: Enumeration refuses degree slices with more monomials than this.
ENUMERATION_LIMIT = 10**4


@dataclass(frozen=True)
class ExchangeFailure:
    """Why an ideal is not a discrete polymatroid.

    ``reason`` is ``"exchange"`` when no ``j`` rescues the pair ``(m, m_prime)``
    at the 0-based variable ``index``, or ``"impure"`` when ``m`` and
    ``m_prime`` are maximal elements of different degree (``index`` is None).
    """

    reason: str
    m: Monomial
    m_prime: Monomial
    index: int | None = None

    def to_json(self) -> dict:
        return {"reason": self.reason, "m": list(self.m), "m_prime": list(self.m_prime), "index": self.index}


@dataclass(frozen=True)
class PolymatroidReport:
    holds: bool
    witness: ExchangeFailure | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": None if self.witness is None else self.witness.to_json()}


def exchange_partner(g: OrderIdeal, m: Monomial, m_prime: Monomial, i: int) -> int | None:
    """Smallest ``j`` with ``m_j < m'_j`` and ``m * x_j / x_i`` in ``g``, else None."""
    for j in range(g.n):
        if m[j] < m_prime[j]:
            moved = list(m)
            moved[i] -= 1
            moved[j] += 1
            if tuple(moved) in g:
                return j
    return None


def violates_exchange(g: OrderIdeal, m: Monomial, m_prime: Monomial, i: int) -> bool:
    """Independent re-check of a single exchange condition."""
    if m[i] <= m_prime[i]:
        return False
    return exchange_partner(g, m, m_prime, i) is None


def is_discrete_polymatroid(g: OrderIdeal) -> PolymatroidReport:
    """Decide whether ``g`` is pure and satisfies the single-step exchange.

    Ordered pairs of distinct maximal monomials are scanned in graded-lex
    order, so the reported witness is the lexicographically first failure.
    """
    if not g.members:
        raise DomainError("the empty ideal is not a discrete polymatroid candidate")
    tops = g.maximal
    low = degree(tops[0])
    for other in tops[1:]:
        if degree(other) != low:
            return PolymatroidReport(False, ExchangeFailure("impure", tops[0], other))
    for m in tops:
        for m_prime in tops:
            if m == m_prime:
                continue
            for i in range(g.n):
                if m[i] > m_prime[i] and exchange_partner(g, m, m_prime, i) is None:
                    return PolymatroidReport(False, ExchangeFailure("exchange", m, m_prime, i))
    return PolymatroidReport(True)


def enumerate_discrete_polymatroids(n: int, d: int, max_count: int | None = None) -> Iterator[OrderIdeal]:
    """Yield every discrete polymatroid on ``n`` variables generated in degree ``d``.

    Candidates are the nonempty sets of degree-``d`` monomials, ordered by
    size and then lexicographically by their sorted generator tuples.
    """
    pool = monomials_of_degree(n, d)
    if len(pool) > ENUMERATION_LIMIT:
        raise SizeError(
            f"{len(pool)} monomials of degree {d} on {n} variables exceeds {ENUMERATION_LIMIT}",
            ENUMERATION_LIMIT,
            len(pool),
        )
    produced = 0
    for size in range(1, len(pool) + 1):
        for gens in itertools.combinations(pool, size):
            if max_count is not None and produced >= max_count:
                return
            g = ideal_from_generators(n, gens)
            if is_discrete_polymatroid(g):
                produced += 1
                yield g
