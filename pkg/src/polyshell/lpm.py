"""Lattice path matroids M[P, Q].

Paths are strings over ``E`` (east) and ``N`` (north) from ``(0, 0)`` to
``(m, r)``.  The ground set is the step positions ``1 .. m + r``; a basis is
the set of north-step positions of a path lying between ``P`` and ``Q``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, PathError
from .hvector import FOUND, ABSENT, SearchBounds, SearchOutcome, degree_sequence_matches, f_to_h, find_pm_witness
from .monomials import DegreeVector
from .polymatroid import PolymatroidReport, is_discrete_polymatroid
from .shelling import MShelling, VerificationReport, shell_polymatroid, verify_m_shelling

log = logging.getLogger(__name__)

#: Largest ground set for which independent sets are enumerated.
GROUND_LIMIT = 16


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        bad = set(self.steps) - {"E", "N"}
        if bad:
            raise PathError(f"path {self.steps!r} contains characters other than E and N: {sorted(bad)}")

    @property
    def m(self) -> int:
        return self.steps.count("E")

    @property
    def r(self) -> int:
        return self.steps.count("N")

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """``heights()[t]`` is the number of north steps among the first ``t`` steps."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (s == "N"))
        return out

    def __str__(self) -> str:
        return self.steps


def parse_path(s: str, m: int, r: int) -> LatticePath:
    path = LatticePath(s.strip().upper())
    if (path.m, path.r) != (m, r):
        raise PathError(f"path {s!r} has {path.m} E and {path.r} N steps, expected {m} and {r}")
    return path


def _same_shape(a: LatticePath, b: LatticePath) -> None:
    if (a.m, a.r) != (b.m, b.r):
        raise PathError(f"paths {a} and {b} end at different points")


def never_above(a: LatticePath, b: LatticePath) -> bool:
    """True iff ``a`` never rises above ``b``."""
    _same_shape(a, b)
    return all(x <= y for x, y in zip(a.heights(), b.heights()))


def enumerate_between(lower: LatticePath, upper: LatticePath) -> Iterator[LatticePath]:
    """Every path weakly between ``lower`` and ``upper``, lexicographically with E < N."""
    if not never_above(lower, upper):
        raise PathError(f"{lower} goes above {upper}")
    lo, hi = lower.heights(), upper.heights()
    total = len(lower)

    def walk(prefix: str, height: int) -> Iterator[str]:
        t = len(prefix)
        if t == total:
            yield prefix
            return
        if lo[t + 1] <= height <= hi[t + 1]:
            yield from walk(prefix + "E", height)
        if lo[t + 1] <= height + 1 <= hi[t + 1]:
            yield from walk(prefix + "N", height + 1)

    for steps in walk("", 0):
        yield LatticePath(steps)


def north_steps(path: LatticePath) -> frozenset[int]:
    """1-based positions of the north steps."""
    return frozenset(i for i, s in enumerate(path.steps, start=1) if s == "N")


@dataclass(frozen=True)
class LatticePathMatroid:
    lower: LatticePath
    upper: LatticePath
    bases: tuple[tuple[int, ...], ...]

    @property
    def ground_size(self) -> int:
        return len(self.lower)

    @property
    def rank(self) -> int:
        return self.lower.r

    def to_json(self) -> dict:
        return {"P": self.lower.steps, "Q": self.upper.steps, "bases": [list(b) for b in self.bases]}


def build_matroid(lower: LatticePath, upper: LatticePath) -> LatticePathMatroid:
    bases = tuple(tuple(sorted(north_steps(R))) for R in enumerate_between(lower, upper))
    return LatticePathMatroid(lower, upper, bases)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`check_base_exchange`.

    On failure ``axiom`` is ``"B1"`` (no bases) or ``"B2"``; for B2,
    ``witness`` is ``(B, B', x)`` with no rescuing ``y``.
    """

    holds: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        w = self.witness
        return {
            "holds": self.holds,
            "axiom": self.axiom,
            "witness": None if w is None else {"B": list(w[0]), "B_prime": list(w[1]), "x": w[2]},
        }


def check_base_exchange(bases: LatticePathMatroid | Iterable[Iterable[int]]) -> AxiomReport:
    """Check the matroid basis axioms on a base family.

    Accepts a :class:`LatticePathMatroid` or any iterable of bases, so that
    hand-written families can be tested too.
    """
    if isinstance(bases, LatticePathMatroid):
        bases = bases.bases
    family = sorted({frozenset(b) for b in bases}, key=sorted)
    if not family:
        return AxiomReport(False, "B1")
    lookup = set(family)
    for B in family:
        for B2 in family:
            if B == B2:
                continue
            for x in sorted(B - B2):
                if not any((B - {x}) | {y} in lookup for y in B2 - B):
                    return AxiomReport(False, "B2", (tuple(sorted(B)), tuple(sorted(B2)), x))
    return AxiomReport(True)


def independent_set_counts(bases: Iterable[Iterable[int]], ground_size: int) -> DegreeVector:
    """f-vector of the complex of subsets of bases: entry ``i`` counts ``i``-element sets."""
    if ground_size > GROUND_LIMIT:
        raise DomainError(f"ground set of size {ground_size} exceeds the limit {GROUND_LIMIT}")
    masks = {sum(1 << (e - 1) for e in b) for b in bases}
    if not masks:
        raise DomainError("no bases")
    rank = max(bin(b).count("1") for b in masks)
    seen: set[int] = set()
    for b in masks:
        sub = b
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & b
    counts = [0] * (rank + 1)
    for s in seen:
        counts[bin(s).count("1")] += 1
    return tuple(counts)


def matroid_f_vector(M: LatticePathMatroid) -> DegreeVector:
    return independent_set_counts(M.bases, M.ground_size)


def matroid_h_vector(M: LatticePathMatroid) -> DegreeVector:
    return f_to_h(matroid_f_vector(M))


@dataclass(frozen=True)
class Corollary3Report:
    """Certificate chain for one lattice path matroid.

    ``status`` is the PM-witness search status; ``anomaly`` is set when the
    search completed without a witness or the resulting shelling failed to
    verify.  Either would contradict the theory and is logged loudly.
    """

    matroid: LatticePathMatroid
    f_vector: DegreeVector
    h_vector: DegreeVector
    search: SearchOutcome
    polymatroid: PolymatroidReport | None = None
    shelling: MShelling | None = None
    verification: VerificationReport | None = None
    reverified: bool = False

    @property
    def status(self) -> str:
        return self.search.status

    @property
    def anomaly(self) -> bool:
        if self.search.status == ABSENT:
            return True
        return self.search.status == FOUND and not self.reverified

    def to_json(self) -> dict:
        return {
            "P": self.matroid.lower.steps,
            "Q": self.matroid.upper.steps,
            "bases": len(self.matroid.bases),
            "f_vector": list(self.f_vector),
            "h_vector": list(self.h_vector),
            "status": self.status,
            "anomaly": self.anomaly,
            "reverified": self.reverified,
            "search": self.search.to_json(),
            "polymatroid": None if self.polymatroid is None else self.polymatroid.to_json(),
            "shelling": None if self.shelling is None else self.shelling.to_json(),
            "verification": None if self.verification is None else self.verification.to_json(),
        }


def corollary3_check(lower: LatticePath, upper: LatticePath, bounds: SearchBounds = SearchBounds()) -> Corollary3Report:
    """h-vector of M[P, Q], a discrete polymatroid realising it, and a verified shelling."""
    M = build_matroid(lower, upper)
    f = matroid_f_vector(M)
    h = f_to_h(f)
    outcome = find_pm_witness(h, bounds)
    if outcome.status != FOUND:
        report = Corollary3Report(M, f, h, outcome)
        if outcome.status == ABSENT:
            log.error("no discrete polymatroid realises h=%s of M[%s, %s]", h, lower, upper)
        return report
    g = outcome.witness
    pm = is_discrete_polymatroid(g)
    s = shell_polymatroid(g)
    check = verify_m_shelling(g, s)
    reverified = pm.holds and check.valid and degree_sequence_matches(g, h)
    if not reverified:
        log.error("certificate for M[%s, %s] does not re-verify", lower, upper)
    return Corollary3Report(M, f, h, outcome, pm, s, check, reverified)


def all_paths(m: int, r: int) -> list[LatticePath]:
    """Every path to ``(m, r)``, lexicographically with E < N."""
    out = []
    for north in combinations(range(m + r), r):
        steps = ["E"] * (m + r)
        for i in north:
            steps[i] = "N"
        out.append(LatticePath("".join(steps)))
    out.sort(key=lambda p: p.steps)
    return out


def path_pairs(max_length: int) -> Iterator[tuple[LatticePath, LatticePath]]:
    """All ``(P, Q)`` with ``1 <= m + r <= max_length`` and ``P`` never above ``Q``."""
    for total in range(1, max_length + 1):
        for r in range(total + 1):
            paths = all_paths(total - r, r)
            for P in paths:
                for Q in paths:
                    if never_above(P, Q):
                        yield P, Q
