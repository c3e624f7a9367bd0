"""Verifiers and exact bounds for spherical and circular Kakeya sets.

A radius-spherical Kakeya set contains a sphere of every nonzero radius; a
center-spherical Kakeya set contains, for every a1 in F_q, a sphere whose
center has first coordinate a1.  The one-dimensional analogues are the
difference cover K - K = F_q and the restricted sum cover K (+) K = F_q
(sums of two distinct elements).

Witness mode checks a certificate object against the set; exhaustive mode
scans all candidate spheres and needs no certificate, within a work budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadDimensionError, BudgetExceededError
from .field import Fq, ceil_sqrt, prime_power_decompose
from .geometry import (
    PointSet,
    hypersphere_points,
    norm_profile,
    point_unrank,
    space_size,
    sphere_points,
)

DEFAULT_BUDGET = 100_000_000


def exact_str(value) -> str:
    """Render an exact integer or rational; halves appear as 'num/2'."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


# ---- lower bound for spherical Kakeya sets ----

@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    branch: str
    value: Fraction

    @property
    def ceiling(self) -> int:
        return math.ceil(self.value)


def spherical_kakeya_lower_bound(q: int, n: int) -> BoundReport:
    """Exact lower bound for the size of any set containing q - 1 spheres
    of distinct radii (n >= 4), or (q-1)/2 such spheres (n in {2, 3}).

    The value can be a half-integer; callers wanting a point count take
    the ceiling.
    """
    prime_power_decompose(q)
    if not isinstance(n, int) or n < 2:
        raise BadDimensionError(f"bound needs dimension >= 2, got {n}")
    if n >= 4:
        e = (n - 1) // 2
        value = (Fraction(q ** n, 2) + Fraction(q ** (n - 1), 2) - q ** (n - 2)
                 - Fraction(q ** (e + 2), 2) + Fraction(q ** (e + 1), 2))
        return BoundReport(q, n, "n>=4", value)
    value = Fraction(q ** n - q ** (n - 2), 4)
    return BoundReport(q, n, "n in {2,3}", value)


def circular_lower_bounds(q: int) -> tuple[int, int]:
    """(ceil(sqrt(q)), ceil(sqrt(2q))): minimum sizes for difference and
    restricted-sum covers of F_q."""
    prime_power_decompose(q)
    return ceil_sqrt(q), ceil_sqrt(2 * q)


# ---- witness checking ----

def witness_valid(field: Fq, points: PointSet, witness) -> bool:
    """Check a coverage certificate against a point set.

    Key sets must be exact: all of F_q^* for radius-style kinds, all of
    F_q for center-style kinds.  Every certified object must lie inside
    the set.  Returns False on any mismatch instead of raising.
    """
    kind = witness.kind
    entries = witness.entries
    if kind == "radius":
        if set(entries) != set(field.units()):
            return False
        for r, spec in entries.items():
            if spec.radius != r or len(spec.center) != points.n:
                return False
            if not sphere_points(field, spec).issubset(points):
                return False
        return True
    if kind == "center-coordinate":
        if set(entries) != set(field.elements()):
            return False
        for a1, spec in entries.items():
            if spec.center[0] != a1 or len(spec.center) != points.n:
                return False
            if not sphere_points(field, spec).issubset(points):
                return False
        return True
    if kind == "hypersphere":
        if set(entries) != set(field.units()):
            return False
        for r, spec in entries.items():
            if spec.radius != r or len(spec.center) != points.n:
                return False
            if not hypersphere_points(field, spec).issubset(points):
                return False
        return True
    if kind in ("circular-radius", "circular-center"):
        if points.n != 1:
            return False
        want = set(field.units()) if kind == "circular-radius" else set(field.elements())
        if set(entries) != want:
            return False
        mask = points.mask
        for key, spec in entries.items():
            a, r = spec.center, spec.radius
            if r == 0:
                return False
            if kind == "circular-radius" and r != key:
                return False
            if kind == "circular-center" and a != key:
                return False
            if not (mask[field.add(a, r)] and mask[field.sub(a, r)]):
                return False
        return True
    return False


# ---- exhaustive sphere scans ----

def _complement_hit_counts(points: PointSet, budget: int) -> np.ndarray:
    """G[a, v] = number of points outside the set at norm-distance v from
    center rank a.  A sphere S_v(a) lies inside the set iff G[a, v] == 0."""
    field = points.field
    q = field.q
    n = points.n
    space = space_size(field, n)
    comp = np.flatnonzero(~points.mask)
    estimate = space * max(int(comp.size), 1)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    sq = field.sq_arr
    sub = field.sub_table
    add = field.add_table
    steps = q ** np.arange(n, dtype=np.int64)
    cdig = ((comp[:, None] // steps[None, :]) % q).astype(np.int32)
    out = np.zeros((space, q), dtype=np.int64)
    if comp.size == 0:
        return out
    chunk = max(1, 4_000_000 // int(comp.size))
    centers = np.arange(space, dtype=np.int64)
    for lo in range(0, space, chunk):
        hi = min(space, lo + chunk)
        adig = ((centers[lo:hi, None] // steps[None, :]) % q).astype(np.int32)
        acc = np.zeros((hi - lo, comp.size), dtype=np.int32)
        for i in range(n):
            term = sq[sub[cdig[None, :, i], adig[:, i, None]]]
            acc = add[acc, term]
        flat = acc + (np.arange(hi - lo, dtype=np.int64)[:, None] * q)
        counts = np.bincount(flat.reshape(-1), minlength=(hi - lo) * q)
        out[lo:hi] = counts.reshape(hi - lo, q)
    return out


def verify_radius_kakeya(points: PointSet, witness=None, *,
                         budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the set contains a sphere of every radius in F_q^*.

    With a witness, checks the certificate; otherwise scans all centers
    exhaustively (work roughly q^n times the complement size)."""
    if points.n < 2:
        raise BadDimensionError("spherical verification needs dimension >= 2")
    if witness is not None:
        return witness.kind == "radius" and witness_valid(points.field, points, witness)
    hits = _complement_hit_counts(points, budget)
    return bool((hits[:, 1:] == 0).any(axis=0).all())


def verify_center_kakeya(points: PointSet, witness=None, *,
                         budget: int = DEFAULT_BUDGET) -> bool:
    """True iff for every a1 in F_q the set contains a sphere (of some
    nonzero radius) whose center has first coordinate a1."""
    if points.n < 2:
        raise BadDimensionError("spherical verification needs dimension >= 2")
    field = points.field
    if witness is not None:
        return witness.kind == "center-coordinate" and witness_valid(field, points, witness)
    hits = _complement_hit_counts(points, budget)
    ok_center = (hits[:, 1:] == 0).any(axis=1)
    first = (np.arange(len(ok_center), dtype=np.int64) % field.q)
    per_coord = np.bincount(first[ok_center], minlength=field.q)
    return bool((per_coord > 0).all())


def verify_intersection_lemma(field: Fq, n: int, *,
                              budget: int = DEFAULT_BUDGET) -> int:
    """Maximum intersection size over all pairs of distinct spheres in
    F_q^n, by exhaustive scan over all centers and radii.

    The maximum never exceeds q^(n-2) + q^((n-1)//2); same-center pairs
    with different radii are disjoint.
    """
    if n < 2:
        raise BadDimensionError("sphere pairs need dimension >= 2")
    q = field.q
    space = space_size(field, n)
    estimate = space ** 3 // 2 + 1
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    rows = [norm_profile(field, n, center=None)]
    for a in range(1, space):
        rows.append(norm_profile(field, n, center=point_unrank(field, n, a)))
    m = np.stack(rows).astype(np.int64)
    best = 0
    qq = q * q
    for i in range(space - 1):
        joint = m[i][None, :] * q + m[i + 1:]
        joint += np.arange(joint.shape[0], dtype=np.int64)[:, None] * qq
        counts = np.bincount(joint.reshape(-1), minlength=joint.shape[0] * qq)
        counts = counts.reshape(joint.shape[0], q, q)
        best = max(best, int(counts[:, 1:, 1:].max()))
    return best


def intersection_lemma_bound(q: int, n: int) -> int:
    if n < 2:
        raise BadDimensionError("sphere pairs need dimension >= 2")
    return q ** (n - 2) + q ** ((n - 1) // 2)


# ---- one-dimensional covers ----

def _clean_ranks(field: Fq, elems) -> list[int]:
    ks = sorted(set(int(x) for x in elems))
    if ks and not (0 <= ks[0] and ks[-1] < field.q):
        raise ValueError("element rank out of range")
    return ks


def diff_cover(field: Fq, elems) -> bool:
    """True iff K - K = F_q."""
    ks = _clean_ranks(field, elems)
    if not ks:
        return False
    got = np.unique(field.sub_table[np.ix_(ks, ks)])
    return got.size == field.q


def sum_cover(field: Fq, elems) -> bool:
    """True iff K (+) K = F_q, sums of two distinct elements only."""
    ks = _clean_ranks(field, elems)
    if len(ks) < 2:
        return False
    sums = field.add_table[np.ix_(ks, ks)]
    off_diag = ~np.eye(len(ks), dtype=bool)
    got = np.unique(sums[off_diag])
    return got.size == field.q
