"""M-shellings of monomial order ideals.

Three independent pieces live here:

* :func:`shell_polymatroid` builds a shelling of a discrete polymatroid by
  splitting off the part divisible by the top power of one variable and
  recursing on both halves.
* :func:`verify_m_shelling` checks any claimed shelling against the
  definition, without trusting where it came from.
* :func:`is_m_shellable_bruteforce` searches for a shelling of an arbitrary
  pure ideal by backtracking.  It shares no logic with the recursion and is
  used as its oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import DimensionError, DomainError, InvariantError, SizeError
from .monomials import (
    DegreeVector,
    Monomial,
    OrderIdeal,
    box,
    box_size,
    degree,
    divides,
    divisors,
    grlex_key,
    is_pure,
    lower_covers,
    monomial,
    multiply,
    one,
    unit,
    upper_covers,
)
from .polymatroid import is_discrete_polymatroid

log = logging.getLogger(__name__)

#: Default member limit for the brute-force oracle.
ORACLE_CAP = 200


@dataclass(frozen=True)
class ShellingInterval:
    """The divisor interval ``[bottom, top]``.

    Construction does not insist that ``bottom`` divides ``top`` so that
    malformed input can reach :func:`verify_m_shelling` and be reported.
    """

    bottom: Monomial
    top: Monomial

    def __post_init__(self):
        if len(self.bottom) != len(self.top):
            raise DimensionError(f"interval endpoints {self.bottom}, {self.top} differ in arity")

    def members(self) -> list[Monomial]:
        if not divides(self.bottom, self.top):
            raise DomainError(f"{self.bottom} does not divide {self.top}")
        return sorted(box(self.bottom, self.top), key=grlex_key)

    def __len__(self) -> int:
        return box_size(self.bottom, self.top)

    def shifted(self, by: Monomial) -> ShellingInterval:
        return ShellingInterval(multiply(self.bottom, by), multiply(self.top, by))

    def degree_vector(self) -> DegreeVector:
        """Members counted by total degree (index 0 is degree 0)."""
        # product of chains: convolve the per-variable ranges, then shift
        counts = [1]
        for lo, hi in zip(self.bottom, self.top):
            span = hi - lo + 1
            new = [0] * (len(counts) + span - 1)
            for k, c in enumerate(counts):
                for t in range(span):
                    new[k + t] += c
            counts = new
        return (0,) * degree(self.bottom) + tuple(counts)

    def to_json(self) -> dict:
        return {"bottom": list(self.bottom), "top": list(self.top)}


@dataclass(frozen=True)
class MShelling:
    intervals: tuple[ShellingInterval, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def to_json(self) -> dict:
        return {"intervals": [iv.to_json() for iv in self.intervals]}

    @classmethod
    def from_json(cls, doc: dict) -> MShelling:
        try:
            raw = doc["intervals"]
            intervals = tuple(ShellingInterval(monomial(iv["bottom"]), monomial(iv["top"])) for iv in raw)
        except (KeyError, TypeError):
            raise DomainError('a shelling is {"intervals": [{"bottom": [...], "top": [...]}, ...]}') from None
        return cls(intervals)

    @classmethod
    def of(cls, *pairs) -> MShelling:
        """Shorthand: ``MShelling.of((a, b), (c, d))``."""
        return cls(tuple(ShellingInterval(tuple(a), tuple(b)) for a, b in pairs))


# -- verification -------------------------------------------------------------

CHECKS = ("bottom_divides_top", "top_is_maximal", "disjoint", "covers_ideal", "prefix_closed")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: tuple[Monomial, ...] = ()
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "witness": [list(m) for m in self.witness],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :func:`verify_m_shelling`.

    ``checks`` holds every check that ran; checking stops at the first failure.
    """

    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return len(self.checks) == len(CHECKS) and all(c.passed for c in self.checks)

    @property
    def failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        fail = self.failure
        return {
            "valid": self.valid,
            "failed_check": None if fail is None else fail.name,
            "checks": [c.to_json() for c in self.checks],
        }


def verify_m_shelling(g: OrderIdeal, s: MShelling) -> VerificationReport:
    """Check ``s`` against the M-shelling definition for ``g``.

    Does not require ``g`` to be a polymatroid, or even pure.
    """
    for iv in s.intervals:
        if len(iv.top) != g.n:
            raise DimensionError(f"interval {iv} does not have {g.n} variables")
    done: list[CheckResult] = []

    def ok(name: str) -> None:
        done.append(CheckResult(name, True))

    def fail(name: str, witness, detail: str) -> VerificationReport:
        done.append(CheckResult(name, False, tuple(witness), detail))
        return VerificationReport(tuple(done))

    for k, iv in enumerate(s.intervals):
        if not divides(iv.bottom, iv.top):
            return fail(CHECKS[0], (iv.bottom, iv.top), f"interval {k}: bottom does not divide top")
    ok(CHECKS[0])

    tops = set(g.maximal)
    for k, iv in enumerate(s.intervals):
        if iv.top not in tops:
            return fail(CHECKS[1], (iv.top,), f"interval {k}: top is not a maximal element")
    ok(CHECKS[1])

    blocks = [iv.members() for iv in s.intervals]
    owner: dict[Monomial, int] = {}
    for k, block in enumerate(blocks):
        for m in block:
            if m in owner:
                return fail(CHECKS[2], (m,), f"intervals {owner[m]} and {k} overlap")
            owner[m] = k
    ok(CHECKS[2])

    missing = [m for m in g.members if m not in owner]
    if missing:
        return fail(CHECKS[3], missing[:1], f"{len(missing)} member(s) not covered")
    extra = sorted((m for m in owner if m not in g), key=grlex_key)
    if extra:
        return fail(CHECKS[3], extra[:1], f"{len(extra)} monomial(s) outside the ideal")
    ok(CHECKS[3])

    # Members added in earlier blocks already had their covers present.
    seen: set[Monomial] = set()
    for k, block in enumerate(blocks):
        seen.update(block)
        for m in block:
            for c in lower_covers(m):
                if c not in seen:
                    return fail(CHECKS[4], (m, c), f"prefix ending at interval {k} contains {m} but not {c}")
    ok(CHECKS[4])
    return VerificationReport(tuple(done))


# -- the recursive construction -----------------------------------------------


@dataclass(frozen=True)
class SplitStep:
    """One split performed by :func:`shell_polymatroid` (for tracing)."""

    depth: int
    variable: int
    power: int
    parent_maximal: int
    lower_maximal: int
    upper_maximal: int


def split_variable(g: OrderIdeal) -> int | None:
    """Largest 0-based index on which two maximal elements disagree."""
    tops = g.maximal
    for r in reversed(range(g.n)):
        if len({m[r] for m in tops}) > 1:
            return r
    return None


def split(g: OrderIdeal, r: int) -> tuple[int, OrderIdeal, OrderIdeal]:
    """Return ``(k, lower, upper)`` for the split of ``g`` at variable ``r``.

    ``k`` is the top exponent of ``x_r``; ``lower`` holds the members not
    divisible by ``x_r**k`` and ``upper`` the rest divided by ``x_r**k``.
    """
    k = max(m[r] for m in g.maximal)
    low = [m for m in g.members if m[r] < k]
    high = [m[:r] + (m[r] - k,) + m[r + 1:] for m in g.members if m[r] >= k]
    try:
        return k, OrderIdeal.from_members(g.n, low), OrderIdeal.from_members(g.n, high)
    except DomainError as exc:
        raise InvariantError(f"split at x{r + 1}^{k} is not an order ideal: {exc}") from exc


def _shell(g: OrderIdeal, depth: int, trace: list | None) -> list[ShellingInterval]:
    if len(g.maximal) == 1:
        return [ShellingInterval(one(g.n), g.maximal[0])]
    r = split_variable(g)
    if r is None:
        raise InvariantError("several maximal elements but no coordinate on which they differ")
    k, lower, upper = split(g, r)
    for part, label in ((lower, "lower"), (upper, "upper")):
        report = is_discrete_polymatroid(part)
        if not report.holds:
            raise InvariantError(f"{label} half of split at x{r + 1}^{k} is not a discrete polymatroid: {report.witness}")
        if len(part.maximal) >= len(g.maximal):
            raise InvariantError(
                f"{label} half of split at x{r + 1}^{k} has {len(part.maximal)} maximal elements, "
                f"parent has {len(g.maximal)}"
            )
    if trace is not None:
        trace.append(SplitStep(depth, r, k, len(g.maximal), len(lower.maximal), len(upper.maximal)))
    shift = unit(g.n, r, k)
    return _shell(lower, depth + 1, trace) + [iv.shifted(shift) for iv in _shell(upper, depth + 1, trace)]


def shell_polymatroid(g: OrderIdeal, trace: list | None = None) -> MShelling:
    """Construct an M-shelling of the discrete polymatroid ``g``.

    Splits at the last variable ``x_r`` on which maximal elements differ,
    shells both halves recursively and concatenates: the lower half first,
    then the upper half multiplied back by ``x_r**k``.  Both halves are
    re-checked at every step and an :class:`InvariantError` is raised if
    either is not a discrete polymatroid with fewer maximal elements.

    If ``trace`` is a list, one :class:`SplitStep` is appended per split.
    """
    report = is_discrete_polymatroid(g)
    if not report.holds:
        raise DomainError(f"not a discrete polymatroid: {report.witness}")
    return MShelling(tuple(_shell(g, 0, trace)))


def shelling_degree_polynomial(s: MShelling) -> DegreeVector:
    """Sum of the degree vectors of the intervals of ``s``."""
    if not s.intervals:
        raise DomainError("empty shelling")
    total: list[int] = []
    for iv in s.intervals:
        vec = iv.degree_vector()
        if len(vec) > len(total):
            total.extend([0] * (len(vec) - len(total)))
        for i, c in enumerate(vec):
            total[i] += c
    return tuple(total)


# -- brute-force oracle -------------------------------------------------------


def is_m_shellable_bruteforce(g: OrderIdeal, cap: int = ORACLE_CAP) -> MShelling | None:
    """Search for any M-shelling of the pure ideal ``g``.

    Intervals are peeled off the end of the order: a step removes ``[a, b]``
    for a maximal ``b`` of ``g`` still present and a divisor ``a`` of ``b``
    (both in graded-lex order) provided what remains is still downward
    closed.  Remainders already known to be dead ends are skipped.  Returns
    the first shelling found, in forward order, or None.
    """
    if len(g) > cap:
        raise SizeError(f"ideal has {len(g)} members, oracle cap is {cap}", cap, len(g))
    if not is_pure(g):
        raise DomainError("the brute-force oracle only handles pure ideals")
    tops = g.maximal
    top_set = set(tops)
    bottoms = {b: divisors(b) for b in tops}
    dead: set[frozenset] = set()

    def stuck(remaining: frozenset) -> bool:
        # an element maximal in the remainder must be the top of a later-peeled interval
        return any(m not in top_set and not any(c in remaining for c in upper_covers(m)) for m in remaining)

    def peel(remaining: frozenset) -> list[ShellingInterval] | None:
        if not remaining:
            return []
        if remaining in dead or stuck(remaining):
            return None
        for b in tops:
            if b not in remaining:
                continue
            for a in bottoms[b]:
                block = set(box(a, b))
                if not block <= remaining:
                    continue
                if any(c in remaining and c not in block for m in block for c in upper_covers(m)):
                    continue
                rest = peel(remaining - block)
                if rest is not None:
                    rest.append(ShellingInterval(a, b))
                    return rest
        dead.add(remaining)
        return None

    found = peel(frozenset(g.members))
    if found is None:
        log.debug("no M-shelling for ideal with generators %s", tops)
        return None
    return MShelling(tuple(found))
