"""
Exact evaluation of the floor/genus inequalities, per-braid verification
reports, the self-certifying knot catalogue and seeded campaigns.

All bound arithmetic uses :class:`fractions.Fraction`; strict inequalities
sit on half-integer boundaries where rounding would change the answer.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .braid import BraidWord, is_knot, parse_braid, sigma1_counts
from .invariants import (
    alexander_genus_lower,
    bennequin_chi,
    bennequin_genus_upper,
    connected_chi_lower,
)
from .ordering import DEFAULT_STEP_LIMIT, dehornoy_floor
from .sampling import random_band_product, random_braid, stream

Rational = Fraction


class CertificationError(RuntimeError):
    pass


def render_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def theorem_rhs(n: int, chi: int) -> Fraction:
    """3/2 - 2 chi / (n + 2)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return Fraction(3, 2) - Fraction(2 * chi, n + 2)


def corollary_rhs(n: int, g: int) -> Fraction:
    """4g/(n+2) - 2/(n+2) + 3/2."""
    if n < 2 or g < 0:
        raise ValueError(f"need n >= 2 and g >= 0, got n={n}, g={g}")
    return Fraction(4 * g - 2, n + 2) + Fraction(3, 2)


def corollary_weak_rhs(g: int) -> int:
    return g + 1


def floor_genus_lower(n: int, floor: int) -> int:
    """Least g >= 0 with floor < corollary_rhs(n, g).

    The right-hand side grows by 4/(n+2) per unit of g, so the answer is
    found by solving the linear inequality and correcting for strictness.
    """
    if floor < 0:
        raise ValueError("floor must be non-negative")
    step = Fraction(4, n + 2)
    need = Fraction(floor) - corollary_rhs(n, 0)
    g = max(0, int(need // step))
    while g > 0 and floor < corollary_rhs(n, g - 1):
        g -= 1
    while not floor < corollary_rhs(n, g):
        g += 1
    return g


class VertexCensus(Mapping[tuple[int, int], int]):
    """Vertex counts V(a, b) by number of a-arc and b-arc edges."""

    def __init__(self, counts: Mapping[tuple[int, int], int] | Iterable = ()):
        clean: dict[tuple[int, int], int] = {}
        for (a, b), v in dict(counts).items():
            if a < 0 or b < 0 or a + b < 1:
                raise ValueError(f"bad vertex type ({a}, {b})")
            if v < 0:
                raise ValueError(f"negative count for ({a}, {b})")
            if v:
                clean[(a, b)] = v
        self._counts = clean

    def __getitem__(self, key):
        return self._counts.get(key, 0)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __add__(self, other: VertexCensus) -> VertexCensus:
        return VertexCensus(Counter(self._counts) + Counter(other._counts))

    def __repr__(self):
        return f"VertexCensus({self._counts!r})"


def lemma2_residual(census: Mapping[tuple[int, int], int], chi: int) -> int:
    """Left side minus right side of the vertex-count Euler identity.

    Reads the tail sum with V indexed by (a-arcs, b-arcs): a vertex of
    total valence v >= 4 with a a-arc edges contributes (v + a - 4).
    Zero means the census is consistent with Euler characteristic ``chi``.
    """
    V = lambda a, b: census.get((a, b), 0)  # noqa: E731
    lhs = 2 * V(1, 0) + 2 * V(0, 2) + V(0, 3) - 4 * chi
    rhs = V(2, 1) + 2 * V(3, 0)
    for (a, b), count in census.items():
        v = a + b
        if v >= 4:
            rhs += (v + a - 4) * count
    return lhs - rhs


def lemma3_bound(a: int, b: int) -> Fraction:
    """a + b/2 - 1/2, the floor bound from a vertex of type (a, b)."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError(f"bad vertex type ({a}, {b})")
    return a + Fraction(b - 1, 2)


@dataclass(frozen=True)
class GenusBounds:
    lower: int
    upper: int
    lower_source: str
    upper_source: str


def genus_bounds(w: BraidWord, floor: int | None = None) -> GenusBounds:
    """Best certified genus interval for a knot closure."""
    lower, source = alexander_genus_lower(w), "alexander-span"
    if floor is not None:
        from_floor = floor_genus_lower(w.strands, floor)
        if from_floor > lower:
            lower, source = from_floor, "dehornoy-floor"
    return GenusBounds(lower, bennequin_genus_upper(w), source, "bennequin-surface")


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    lhs: Fraction
    rhs: Fraction
    relation: str = "<"

    def describe(self) -> str:
        mark = "ok  " if self.holds else "FAIL"
        return f"{mark} {self.name}: {render_rational(self.lhs)} {self.relation} {render_rational(self.rhs)}"


def _lt(name: str, lhs, rhs) -> Check:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return Check(name, lhs < rhs, lhs, rhs, "<")


def _le(name: str, lhs, rhs) -> Check:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return Check(name, lhs <= rhs, lhs, rhs, "<=")


CHECK_NAMES = (
    "theorem-chi",
    "corollary-upper",
    "corollary-weak",
    "prop1-sigma1",
    "bounds-order",
    "floor-lower-consistent",
)


@dataclass(frozen=True)
class VerificationReport:
    braid: BraidWord
    floor: int
    chi_lower: int
    chi_connected_lower: int
    genus: GenusBounds | None
    alexander_lower: int | None
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]

    def check(self, name: str) -> Check | None:
        return next((c for c in self.checks if c.name == name), None)

    def to_record(self) -> dict:
        """Flat record; rationals as "p/q", inapplicable checks as None."""
        rec = {
            "braid": str(self.braid),
            "n": self.braid.strands,
            "length": len(self.braid),
            "floor": self.floor,
            "chi_lower": self.chi_lower,
            "chi_connected_lower": self.chi_connected_lower,
            "genus_lower": self.genus.lower if self.genus else None,
            "genus_upper": self.genus.upper if self.genus else None,
            "genus_lower_source": self.genus.lower_source if self.genus else None,
        }
        for name in CHECK_NAMES:
            c = self.check(name)
            rec[f"check_{name}"] = None if c is None else c.holds
        rec["checks"] = [
            {"name": c.name, "holds": c.holds, "lhs": render_rational(c.lhs),
             "relation": c.relation, "rhs": render_rational(c.rhs)}
            for c in self.checks
        ]
        return rec


def verify_braid(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> VerificationReport:
    """Floor, bounds and every necessary consequence of the floor/genus inequality.

    The maximal Euler characteristic is not computable here, so the checks
    substitute certified bounds on the safe side: the Bennequin surface gives
    g <= (len - n + 1)/2, and tubed together it bounds the Euler
    characteristic of connected spanning surfaces from below. A failed check
    is a bug in this package or a counterexample; it is reported, never
    raised.
    """
    n = w.strands
    floor = dehornoy_floor(w, step_limit).floor
    chi = bennequin_chi(w)
    chi_conn = connected_chi_lower(w)
    checks = [_lt("theorem-chi", floor, theorem_rhs(n, chi_conn))]
    s, k = sigma1_counts(w)
    genus = alex = None
    if is_knot(w):
        alex = alexander_genus_lower(w)
        genus = genus_bounds(w, floor)
        upper = genus.upper
        checks.append(_lt("corollary-upper", floor, corollary_rhs(n, upper)))
        checks.append(_lt("corollary-weak", floor, corollary_weak_rhs(upper)))
    if max(s, k) >= 1:
        checks.append(_lt("prop1-sigma1", floor, max(s, k)))
    if genus is not None:
        checks.append(_le("bounds-order", alex, genus.upper))
        checks.append(_le("floor-lower-consistent", floor_genus_lower(n, floor), genus.upper))
    return VerificationReport(w, floor, chi, chi_conn, genus, alex, tuple(checks))


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    braid: BraidWord
    exact_genus: int
    certification: str


_CATALOGUE = (
    ("unknot", "B2: 1", 0),
    ("trefoil", "B2: 1 1 1", 1),
    ("figure-eight", "B3: 1 -2 1 -2", 1),
    ("T(2,5)", "B2: " + " ".join(["1"] * 5), 2),
    ("T(2,7)", "B2: " + " ".join(["1"] * 7), 3),
    ("T(3,4)", "B3: " + " ".join(["1 2"] * 4), 3),
)


def certify(name: str, w: BraidWord, claimed: int) -> CatalogueEntry:
    lower = alexander_genus_lower(w)
    upper = bennequin_genus_upper(w)
    if lower != upper:
        raise CertificationError(f"{name}: Alexander bound {lower} != Bennequin bound {upper}")
    if claimed != lower:
        raise CertificationError(f"{name}: claimed genus {claimed}, certified {lower}")
    return CatalogueEntry(name, w, lower, f"alexander-span = bennequin-surface = {lower}")


def catalogue() -> list[CatalogueEntry]:
    return [certify(name, parse_braid(text), g) for name, text, g in _CATALOGUE]


@dataclass(frozen=True)
class CampaignResult:
    kind: str
    index: int
    report: VerificationReport


def _campaign_sample(args) -> CampaignResult:
    kind, index, seed, max_strands, max_len, max_bands, step_limit = args
    rng = stream(seed, f"campaign-{kind}", index)
    n = rng.randint(2, max_strands)
    sub_seed = rng.getrandbits(64)
    if kind == "random":
        w = random_braid(n, max_len, sub_seed)
    else:
        w = random_band_product(n, rng.randint(0, max_bands), sub_seed)
    return CampaignResult(kind, index, verify_braid(w, step_limit))


def run_campaign(
    trials: int,
    seed: int = 0,
    max_strands: int = 5,
    max_len: int = 20,
    max_bands: int = 20,
    kinds: tuple[str, ...] = ("random", "bands"),
    step_limit: int = DEFAULT_STEP_LIMIT,
    workers: int = 1,
) -> list[CampaignResult]:
    """Verify ``trials`` samples of each kind; results are ordered by (kind, index)."""
    jobs = [
        (kind, i, seed, max_strands, max_len, max_bands, step_limit)
        for kind in kinds
        for i in range(trials)
    ]
    if workers <= 1:
        return [_campaign_sample(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_campaign_sample, jobs, chunksize=64))
