"""Monomials as exponent tuples, and finite order ideals closed under division.

A monomial on ``n`` variables is a tuple of ``n`` non-negative ints; the
all-zeros tuple is the monomial 1.  Everything that has to be ordered is
ordered graded-lexicographically: by total degree, then by the exponent
tuple itself.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import DimensionError, DomainError, MembershipError, SizeError

Monomial = Tuple[int, ...]
DegreeVector = Tuple[int, ...]

#: Default limit on the number of members an order ideal may hold.
CLOSURE_CAP = 10**6


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


def monomial(exponents: Iterable[int]) -> Monomial:
    """Validate and normalise an exponent sequence."""
    m = tuple(exponents)
    for e in m:
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise DomainError(f"exponents must be non-negative integers, got {list(m)!r}")
    return m


def one(n: int) -> Monomial:
    return (0,) * n


def _same_arity(u: Monomial, m: Monomial) -> None:
    if len(u) != len(m):
        raise DimensionError(f"arity mismatch: {u} has {len(u)} variables, {m} has {len(m)}")


def divides(u: Monomial, m: Monomial) -> bool:
    """True iff ``u | m``, i.e. every exponent of ``u`` is at most that of ``m``."""
    _same_arity(u, m)
    return all(a <= b for a, b in zip(u, m))


def degree(m: Monomial) -> int:
    return sum(m)


def quotient(m: Monomial, u: Monomial) -> Monomial:
    """Return ``m / u``; ``u`` must divide ``m``."""
    if not divides(u, m):
        raise DomainError(f"{u} does not divide {m}")
    return tuple(a - b for a, b in zip(m, u))


def multiply(m: Monomial, u: Monomial) -> Monomial:
    _same_arity(u, m)
    return tuple(a + b for a, b in zip(m, u))


def unit(n: int, i: int, power: int = 1) -> Monomial:
    """The monomial ``x_i ** power`` on ``n`` variables (``i`` is 0-based)."""
    return tuple(power if j == i else 0 for j in range(n))


def lower_covers(m: Monomial) -> Iterator[Monomial]:
    """Monomials ``m / x_i`` for every variable occurring in ``m``."""
    for i, e in enumerate(m):
        if e:
            yield m[:i] + (e - 1,) + m[i + 1:]


def upper_covers(m: Monomial) -> Iterator[Monomial]:
    for i, e in enumerate(m):
        yield m[:i] + (e + 1,) + m[i + 1:]


def box_size(a: Monomial, b: Monomial) -> int:
    return math.prod(bi - ai + 1 for ai, bi in zip(a, b))


def box(a: Monomial, b: Monomial) -> Iterator[Monomial]:
    """All ``m`` with ``a | m | b``, in lexicographic order of exponents."""
    return itertools.product(*(range(ai, bi + 1) for ai, bi in zip(a, b)))


def divisors(m: Monomial) -> list[Monomial]:
    """All divisors of ``m`` in graded-lex order."""
    return sorted(box(one(len(m)), m), key=grlex_key)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """Every monomial of total degree ``d`` on ``n`` variables, lexicographically."""
    out = []
    for bars in itertools.combinations(range(n + d - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(n + d - 1 - prev - 1)
        out.append(tuple(exps))
    out.sort()
    return out


def is_downward_closed(members: Iterable[Monomial], universe: frozenset | set | None = None) -> bool:
    """Check that every lower cover of every member lies in ``universe``.

    Closure under lower covers implies closure under all divisors.
    """
    members = list(members)
    universe = set(members) if universe is None else universe
    return all(c in universe for m in members for c in lower_covers(m))


@dataclass(frozen=True)
class OrderIdeal:
    """A finite set of monomials closed under taking divisors.

    Build one with :func:`ideal_from_generators` or :meth:`from_members`;
    ``members`` and ``maximal`` are stored in graded-lex order.
    """

    n: int
    members: tuple[Monomial, ...]
    maximal: tuple[Monomial, ...]
    _lookup: frozenset = field(default=frozenset(), repr=False, compare=False)

    @classmethod
    def from_members(cls, n: int, members: Iterable[Monomial], *, check: bool = True) -> OrderIdeal:
        if n < 1:
            raise DimensionError("order ideals need at least one variable")
        lookup = frozenset(members)
        for m in lookup:
            if len(m) != n:
                raise DimensionError(f"monomial {m} does not have {n} variables")
        if check:
            for m in lookup:
                for c in lower_covers(m):
                    if c not in lookup:
                        raise DomainError(f"not downward closed: {m} is a member but its divisor {c} is not")
        ordered = tuple(sorted(lookup, key=grlex_key))
        maximal = tuple(m for m in ordered if not any(c in lookup for c in upper_covers(m)))
        return cls(n, ordered, maximal, lookup)

    def __contains__(self, m: object) -> bool:
        return m in self._lookup

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.members)

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self.maximal

    def to_json(self) -> dict:
        return {"variables": self.n, "generators": [list(m) for m in self.maximal]}

    @classmethod
    def from_json(cls, doc: dict, cap: int = CLOSURE_CAP) -> OrderIdeal:
        try:
            n = doc["variables"]
            gens = doc["generators"]
        except (KeyError, TypeError):
            raise DomainError('an order ideal is {"variables": n, "generators": [[...], ...]}') from None
        if isinstance(n, bool) or not isinstance(n, int) or not isinstance(gens, list):
            raise DomainError("'variables' must be an integer and 'generators' a list")
        return ideal_from_generators(n, [monomial(g) for g in gens], cap=cap)


def ideal_from_generators(n: int, gens: Iterable[Sequence[int]], cap: int = CLOSURE_CAP) -> OrderIdeal:
    """Close ``gens`` under taking divisors.

    Raises :class:`SizeError` as soon as the closure is known to exceed
    ``cap`` members.
    """
    if n < 1:
        raise DimensionError("order ideals need at least one variable")
    gens = [monomial(g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise DimensionError(f"generator {g} does not have {n} variables")
    members: set[Monomial] = set()
    for g in sorted(set(gens), key=grlex_key, reverse=True):
        if g in members:
            continue
        size = box_size(one(n), g)
        if size > cap:
            raise SizeError(f"closure needs at least {size} monomials, cap is {cap}", cap, size)
        members.update(box(one(n), g))
        if len(members) > cap:
            raise SizeError(
                f"closure needs at least {len(members)} monomials, cap is {cap}", cap, len(members)
            )
    return OrderIdeal.from_members(n, members, check=False)


def is_pure(g: OrderIdeal) -> bool:
    """True iff all maximal elements of ``g`` share one degree."""
    if not g.members:
        raise DomainError("purity is undefined for the empty ideal")
    return len({degree(m) for m in g.maximal}) == 1


def degree_sequence(g: OrderIdeal) -> DegreeVector:
    """Number of members of each total degree, indexed from 0."""
    if not g.members:
        return ()
    counts = [0] * (degree(g.members[-1]) + 1)
    for m in g.members:
        counts[degree(m)] += 1
    return tuple(counts)


def interval_members(g: OrderIdeal, a: Monomial, b: Monomial) -> frozenset[Monomial]:
    """The divisor interval ``[a, b]`` inside ``g``."""
    if not divides(a, b):
        raise DomainError(f"{a} does not divide {b}")
    if b not in g:
        raise MembershipError(f"{b} is not a member of the ideal")
    return frozenset(box(a, b))
