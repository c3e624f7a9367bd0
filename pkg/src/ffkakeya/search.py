"""Minimal-size search for one-dimensional covers of F_q.

kind 'radius' asks for K - K = F_q, kind 'center' for K (+) K = F_q with
distinct summands.  Both cover properties are invariant under affine maps
K -> c*K + d (c != 0), so the exact search fixes 0 and 1 in K; that loses
no generality and shrinks the tree.  Certified minimality can be
re-checked independently with exhaustive_cover_exists, which enumerates
every subset without any normalization or pruning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError
from .field import Fq
from .verification import circular_lower_bounds, diff_cover, sum_cover

EXACT_LIMIT = 13
DEFAULT_NODE_BUDGET = 100_000_000

KIND_RADIUS = "radius"
KIND_CENTER = "center"
KINDS = (KIND_RADIUS, KIND_CENTER)


@dataclass(frozen=True)
class SearchOutcome:
    q: int
    kind: str
    size: int
    example: tuple[int, ...]
    nodes: int
    certified: bool

    def to_json_dict(self) -> dict:
        key = "minimalSize" if self.certified else "foundSize"
        return {
            "q": self.q,
            "kind": self.kind,
            key: self.size,
            "exampleSet": list(self.example),
            "nodesExplored": self.nodes,
            "certified": self.certified,
        }


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")


def _new_bits(field: Fq, kind: str, x: int, chosen: list[int]) -> int:
    """Bitmask of cover values gained by adding x to the chosen set."""
    bits = 0
    if kind == KIND_RADIUS:
        bits |= 1  # x - x
        for y in chosen:
            bits |= (1 << field.sub(x, y)) | (1 << field.sub(y, x))
    else:
        for y in chosen:
            bits |= 1 << field.add(x, y)
    return bits


def _capacity(kind: str, have: int, slots: int) -> int:
    """Upper bound on the number of cover values that adding `slots` more
    elements to a set of size `have` can contribute."""
    if kind == KIND_RADIUS:
        return 2 * slots * have + slots * (slots - 1)
    return slots * have + slots * (slots - 1) // 2


def minimal_circular_exact(field: Fq, kind: str, *, limit: int = EXACT_LIMIT,
                           node_budget: int = DEFAULT_NODE_BUDGET) -> SearchOutcome:
    """Exact minimum cover size with a witness set, by depth-first search
    over sets containing {0, 1}, increasing the candidate size from the
    lower bound until a cover appears.  Deterministic: the returned set is
    the first found in lexicographic rank order."""
    _check_kind(kind)
    q = field.q
    if q > limit:
        raise BudgetExceededError(q, limit)
    full = (1 << q) - 1
    lower = circular_lower_bounds(q)[0 if kind == KIND_RADIUS else 1]
    base = [0, 1]
    base_cov = _new_bits(field, kind, 0, []) | _new_bits(field, kind, 1, [0])
    nodes = 0

    def extend(chosen: list[int], covered: int, start: int, target: int):
        nonlocal nodes
        slots = target - len(chosen)
        if slots == 0:
            return list(chosen) if covered == full else None
        if bin(covered).count("1") + _capacity(kind, len(chosen), slots) < q:
            return None
        for x in range(start, q - slots + 1):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(nodes, node_budget)
            chosen.append(x)
            found = extend(chosen, covered | _new_bits(field, kind, x, chosen[:-1]),
                           x + 1, target)
            chosen.pop()
            if found is not None:
                return found
        return None

    for s in range(max(lower, 2), q + 1):
        found = extend(base, base_cov, 2, s)
        if found is not None:
            return SearchOutcome(q, kind, s, tuple(sorted(found)), nodes, True)
    raise RuntimeError("no cover found up to size q")  # unreachable for odd q >= 3


def exhaustive_cover_exists(field: Fq, kind: str, size: int) -> bool:
    """Whether any subset of the given size covers, by plain enumeration of
    all subsets with no normalization and no pruning."""
    _check_kind(kind)
    predicate = diff_cover if kind == KIND_RADIUS else sum_cover
    for combo in itertools.combinations(range(field.q), size):
        if predicate(field, combo):
            return True
    return False


def greedy_circular(field: Fq, kind: str) -> SearchOutcome:
    """Greedy baseline: repeatedly add the element covering the most
    still-missing values, breaking ties toward the smallest rank."""
    _check_kind(kind)
    q = field.q
    full = (1 << q) - 1
    chosen: list[int] = []
    member = [False] * q
    covered = 0
    nodes = 0
    while covered != full:
        best_x = -1
        best_gain = -1
        for x in range(q):
            if member[x]:
                continue
            nodes += 1
            gain = bin(_new_bits(field, kind, x, chosen) & ~covered).count("1")
            if gain > best_gain:
                best_gain = gain
                best_x = x
        covered |= _new_bits(field, kind, best_x, chosen)
        chosen.append(best_x)
        member[best_x] = True
    return SearchOutcome(q, kind, len(chosen), tuple(sorted(chosen)), nodes, False)
