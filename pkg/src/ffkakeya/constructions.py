"""Constructions of spherical and circular Kakeya sets.

Spherical (n >= 2): a union of one sphere per radius whose size is about
half the space, a set of about half the space containing spheres of one
fixed nonsquare radius around q collinear centers, and a union of
hyper-spheres inside the null quadric ||x|| = 0 of size about q^(n-1).

Circular (n = 1): a circle of radius r around a is the pair {a+r, a-r},
so a set contains circles of every radius iff K - K = F_q, and circles
around centers with every first (only) coordinate iff K (+) K = F_q with
distinct summands.  Three small covers are built: one for prime q, one
for square q from a subfield pair, and one for odd prime powers
q = p^(2m+1) from two digit blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import (
    BadDimensionError,
    NotANonsquareError,
    NotASquareFieldError,
    WrongDegreeError,
    ZeroRadiusError,
)
from .field import Fq, make_field
from .geometry import (
    HypersphereSpec,
    PointSet,
    SphereSpec,
    norm_profile,
    point_unrank,
    space_size,
    sphere_points,
    sum_profile,
)
from .verification import (
    circular_lower_bounds,
    exact_str,
    spherical_kakeya_lower_bound,
    witness_valid,
)

VARIANT_RADIUS = "radius"
VARIANT_CENTER = "center"
VARIANTS = (VARIANT_RADIUS, VARIANT_CENTER)


@dataclass(frozen=True)
class CircleSpec:
    """One-dimensional circle (x - center)^2 = radius^2, the point pair
    {center + radius, center - radius}."""

    center: int
    radius: int

    def __post_init__(self):
        if self.radius == 0:
            raise ZeroRadiusError("circle radius must be nonzero")


@dataclass(frozen=True)
class KakeyaWitness:
    """Coverage certificate: one certified object per parameter value.

    kind is one of 'radius', 'center-coordinate', 'hypersphere',
    'circular-radius', 'circular-center'; entries map the parameter
    (a radius or a center coordinate) to the covering object."""

    kind: str
    entries: dict


@dataclass
class ConstructionResult:
    field: Fq
    n: int
    name: str
    variant: str | None
    points: PointSet
    witness: KakeyaWitness
    size: int
    main_terms: tuple[Fraction, ...]
    bound: Fraction
    bound_is_lower: bool
    bound_met: bool
    witness_valid: bool
    accounting: dict = dc_field(default_factory=dict)

    def to_json_dict(self, include_points: bool = True,
                     include_witness: bool = True) -> dict:
        out = {
            "q": self.field.q,
            "p": self.field.p,
            "k": self.field.k,
            "n": self.n,
            "construction": self.name,
            "variant": self.variant or "",
            "size": self.size,
            "predictedMainTerms": [exact_str(t) for t in self.main_terms],
            "boundValue": exact_str(self.bound),
            "boundIsLower": self.bound_is_lower,
            "boundMet": self.bound_met,
            "witnessValid": self.witness_valid,
            "accounting": dict(sorted(self.accounting.items())),
        }
        if include_points:
            out["ranks"] = [int(r) for r in self.points.ranks()]
        if include_witness:
            out["witness"] = {
                "kind": self.witness.kind,
                "entries": {str(k): _spec_to_dict(v)
                            for k, v in sorted(self.witness.entries.items())},
            }
        return out


def _spec_to_dict(spec) -> dict:
    if isinstance(spec, SphereSpec):
        return {"center": list(spec.center), "radius": spec.radius}
    if isinstance(spec, HypersphereSpec):
        return {"center": list(spec.center), "direction": list(spec.direction),
                "radius": spec.radius}
    if isinstance(spec, CircleSpec):
        return {"center": spec.center, "radius": spec.radius}
    raise TypeError(f"unknown witness entry {type(spec).__name__}")


def _spec_from_dict(data: dict):
    if "direction" in data:
        return HypersphereSpec(tuple(data["center"]), tuple(data["direction"]),
                               int(data["radius"]))
    if isinstance(data["center"], list):
        return SphereSpec(tuple(data["center"]), int(data["radius"]))
    return CircleSpec(int(data["center"]), int(data["radius"]))


def witness_from_json_dict(data: dict) -> KakeyaWitness:
    entries = {int(k): _spec_from_dict(v) for k, v in data["entries"].items()}
    return KakeyaWitness(str(data["kind"]), entries)


def _circular_window_met(q: int, size: int, lower: int) -> bool:
    # sqrt(q) <= size < 6*sqrt(q), checked in exact integer arithmetic
    return lower <= size and size * size >= q and size * size < 36 * q


# ---- spherical constructions ----

def radius_spherical(field: Fq, n: int) -> ConstructionResult:
    """Union over r in F_q^* of the sphere of radius r centered at
    (r, 0, ..., 0), i.e. the solution sets of (x - r)^2 + ||y|| = r.

    Any two of these spheres meet only in the hyperplane where the first
    coordinate is (r + s - 1)/2, and no three share a point, so the union
    size equals sum of sphere sizes minus half the ordered pairwise
    intersection total; both sums are recorded.
    """
    if n < 2:
        raise BadDimensionError("radius construction needs dimension >= 2")
    q = field.q
    space = space_size(field, n)
    tail = (0,) * (n - 1)
    entries = {}
    masks = {}
    for r in field.units():
        spec = SphereSpec((r,) + tail, r)
        entries[r] = spec
        masks[r] = sphere_points(field, spec).mask
    union = np.zeros(space, dtype=bool)
    singles = 0
    for m in masks.values():
        union |= m
        singles += int(np.count_nonzero(m))
    pairs_ordered = 0
    units = list(field.units())
    for i, r in enumerate(units):
        for s in units[i + 1:]:
            pairs_ordered += 2 * int(np.count_nonzero(masks[r] & masks[s]))
    points = PointSet(field, n, union)
    size = points.size
    witness = KakeyaWitness("radius", entries)
    report = spherical_kakeya_lower_bound(q, n)
    return ConstructionResult(
        field=field, n=n, name="radius-spherical", variant=None,
        points=points, witness=witness, size=size,
        main_terms=(Fraction(q ** n, 2), Fraction(q ** (n - 1), 2),
                    Fraction(-(q ** (n - 2)))),
        bound=report.value, bound_is_lower=True,
        bound_met=size >= report.value,
        witness_valid=witness_valid(field, points, witness),
        accounting={
            "sumSphereSizes": singles,
            "sumPairwiseIntersectionsOrdered": pairs_ordered,
            "inclusionExclusionSize": singles - pairs_ordered // 2,
        })


def center_spherical(field: Fq, n: int, r: int | None = None) -> ConstructionResult:
    """All points (x, y) such that r - ||y|| is a square (zero included),
    for one fixed nonsquare radius r.

    The set contains the sphere of radius r around (a, 0, ..., 0) for
    every a in F_q, so every first coordinate occurs as a sphere center.
    """
    if n < 2:
        raise BadDimensionError("center construction needs dimension >= 2")
    q = field.q
    space_size(field, n)
    if r is None:
        r = field.smallest_nonsquare()
    if field.char(r) != -1:
        raise NotANonsquareError(f"rank {r} is not a nonsquare in F_{q}")
    y_norms = norm_profile(field, n - 1)
    good = field.char_arr[field.sub_table[r, y_norms]] >= 0
    mask = np.repeat(good, q)
    points = PointSet(field, n, mask)
    size = points.size
    tail = (0,) * (n - 1)
    witness = KakeyaWitness(
        "center-coordinate",
        {a: SphereSpec((a,) + tail, r) for a in field.elements()})
    if n >= 5:
        main_terms = (Fraction(q ** n, 2), Fraction(q ** (n - 1), 2))
    else:
        main_terms = (Fraction(q ** n, 2),)
    gap = size - sum(main_terms)
    report = spherical_kakeya_lower_bound(q, n)
    accounting = {
        "fixedNonsquareRadius": r,
        "gapVsMainTerms": exact_str(gap),
    }
    if n >= 5:
        accounting["errorConstantTimesQtoNminus2"] = exact_str(
            Fraction(abs(gap)) / q ** (n - 2))
    return ConstructionResult(
        field=field, n=n, name="center-spherical", variant=None,
        points=points, witness=witness, size=size, main_terms=main_terms,
        bound=report.value, bound_is_lower=True,
        bound_met=size >= report.value,
        witness_valid=witness_valid(field, points, witness),
        accounting=accounting)


def hypersphere_union(field: Fq, n: int) -> ConstructionResult:
    """Union over all a with a != 0 and ||a|| != 0 of the hyper-sphere
    with center a, direction a and radius -||a||.

    Every point of the union satisfies ||x|| = 0, so the whole set lives
    inside the null quadric; its size is at most
    q^(n-1) + q^(n//2) - q^((n-1)//2).
    """
    if n < 3:
        raise BadDimensionError("hyper-sphere union needs dimension >= 3")
    q = field.q
    space = space_size(field, n)
    add = field.add_table
    sub = field.sub_table
    mul = field.mul_table
    two = field.add(1, 1)
    norms = norm_profile(field, n)
    union = np.zeros(space, dtype=bool)
    objects = 0
    for a_rank in range(1, space):
        na = int(norms[a_rank])
        if na == 0:
            continue
        a = point_unrank(field, n, a_rank)
        # membership via ||x - a|| = ||x|| - 2 a.x + ||a|| and a.(x - a) = a.x - ||a||
        ax = sum_profile(field, [mul[c] for c in a])
        lhs = sub[add[norms, na], mul[two][ax]]
        union |= (lhs == field.neg(na)) & (ax == na)
        objects += 1
    points = PointSet(field, n, union)
    size = points.size
    entries = {}
    for r in field.units():
        target = field.neg(r)
        a_rank = int(np.flatnonzero(norms == target)[0])
        vec = point_unrank(field, n, a_rank)
        entries[r] = HypersphereSpec(vec, vec, r)
    witness = KakeyaWitness("hypersphere", entries)
    bound = q ** (n - 1) + q ** (n // 2) - q ** ((n - 1) // 2)
    return ConstructionResult(
        field=field, n=n, name="hypersphere-union", variant=None,
        points=points, witness=witness, size=size,
        main_terms=(Fraction(q ** (n - 1)),),
        bound=Fraction(bound), bound_is_lower=False,
        bound_met=size <= bound,
        witness_valid=witness_valid(field, points, witness),
        accounting={
            "objectsUsed": objects,
            "nullQuadricSize": int(np.count_nonzero(norms == 0)),
            "allPointsNormZero": bool(np.all(norms[union] == 0)),
        })


# ---- circular constructions ----

def _circular_witness(field: Fq, ks: list[int], variant: str) -> KakeyaWitness:
    """Deterministic circle certificates from a covering set: the first
    pair (x1, x2) in rank order certifies each parameter."""
    two = field.add(1, 1)
    half = field.inv(two)
    entries = {}
    if variant == VARIANT_RADIUS:
        diffs = field.sub_table[np.ix_(ks, ks)]
        for r in field.units():
            hits = np.argwhere(diffs == field.mul(two, r))
            if hits.size == 0:
                raise RuntimeError(f"no pair certifies radius {r}")
            x1, x2 = ks[hits[0][0]], ks[hits[0][1]]
            entries[r] = CircleSpec(field.mul(half, field.add(x1, x2)), r)
        return KakeyaWitness("circular-radius", entries)
    sums = field.add_table[np.ix_(ks, ks)].copy()
    np.fill_diagonal(sums, -1)
    for a in field.elements():
        hits = np.argwhere(sums == field.mul(two, a))
        if hits.size == 0:
            raise RuntimeError(f"no pair certifies center {a}")
        x1, x2 = ks[hits[0][0]], ks[hits[0][1]]
        entries[a] = CircleSpec(a, field.mul(half, field.sub(x1, x2)))
    return KakeyaWitness("circular-center", entries)


def _circular_result(field: Fq, name: str, variant: str, ks,
                     nominal: int, accounting: dict) -> ConstructionResult:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    ks = sorted(ks)
    points = PointSet.from_ranks(field, 1, ks)
    size = points.size
    witness = _circular_witness(field, ks, variant)
    lower = circular_lower_bounds(field.q)[0 if variant == VARIANT_RADIUS else 1]
    accounting = dict(accounting)
    accounting["nominalSize"] = nominal
    return ConstructionResult(
        field=field, n=1, name=name, variant=variant,
        points=points, witness=witness, size=size,
        main_terms=(Fraction(nominal),),
        bound=Fraction(lower), bound_is_lower=True,
        bound_met=_circular_window_met(field.q, size, lower),
        witness_valid=witness_valid(field, points, witness),
        accounting=accounting)


def circular_prime(p: int, variant: str = VARIANT_RADIUS) -> ConstructionResult:
    """Cover of F_p (p prime) of size at most 2*floor(sqrt(p)) + 1:
    the interval {0, ..., floor(sqrt(p))} joined with the multiples
    {i * ceil(sqrt(p))} (negated for the radius variant)."""
    field = make_field(p, 1)
    fl = isqrt(p)
    ce = fl + 1
    base = set(range(fl + 1))
    k0 = {(i * ce) % p for i in range(1, fl + 1)}
    if variant == VARIANT_RADIUS:
        ks = base | {(-x) % p for x in k0}
    else:
        ks = base | k0
    return _circular_result(
        field, "circular-prime", variant, ks, 2 * fl + 1,
        {"floorSqrt": fl, "ceilSqrt": ce})


def circular_square(field: Fq, variant: str = VARIANT_RADIUS) -> ConstructionResult:
    """Cover of F_q, q = r^2, of size exactly 2r - 1: the subfield F_r
    joined with t * F_r for the canonical generator t."""
    if field.k % 2:
        raise NotASquareFieldError(f"q = {field.q} is not a perfect square")
    r = field.p ** (field.k // 2)
    sub_ranks = [x for x in field.elements() if field.pow(x, r) == x]
    if len(sub_ranks) != r:
        raise RuntimeError("subfield enumeration failed")
    alpha = field.p  # rank of t
    ks = set(sub_ranks) | {field.mul(alpha, x) for x in sub_ranks}
    if len(ks) != 2 * r - 1:
        raise RuntimeError("subfield blocks overlap beyond zero")
    return _circular_result(
        field, "circular-square", variant, ks, 2 * r - 1,
        {"subfieldOrder": r, "generatorRank": alpha})


def circular_odd_power(field: Fq, variant: str = VARIANT_RADIUS) -> ConstructionResult:
    """Cover of F_q, q = p^(2m+1) with m >= 1, of size (2 p^m - 1) |K_p|:
    two digit blocks over the prime-field cover K_p, one spanning the
    generator powers 1..m, the other spanning m+1..2m."""
    if field.k < 3 or field.k % 2 == 0:
        raise WrongDegreeError(f"q = {field.q} is not an odd power p^(2m+1), m >= 1")
    p = field.p
    m = (field.k - 1) // 2
    kp = circular_prime(p, variant)
    kp_ranks = [int(x) for x in kp.points.ranks()]
    pm = p ** m
    k1 = {a0 + p * t for a0 in kp_ranks for t in range(pm)}
    k2 = {a0 + p ** (m + 1) * t for a0 in kp_ranks for t in range(pm)}
    ks = k1 | k2
    expected = (2 * pm - 1) * len(kp_ranks)
    if len(ks) != expected:
        raise RuntimeError("digit blocks overlap beyond the prime cover")
    return _circular_result(
        field, "circular-odd-power", variant, ks, expected,
        {"m": m, "primeCoverSize": len(kp_ranks), "blockWidth": pm})
