"""Minimal one-dimensional cover search: exact DFS, certification, greedy."""

import pytest

from ffkakeya import (
    BudgetExceededError,
    circular_lower_bounds,
    diff_cover,
    greedy_circular,
    make_field,
    minimal_circular_exact,
    prime_power_decompose,
    sum_cover,
)
from ffkakeya.search import exhaustive_cover_exists

SMALL_Q = [3, 5, 7, 9, 11, 13]


def _cover_fn(kind):
    return diff_cover if kind == "radius" else sum_cover


class TestExactSearch:
    def test_frozen_tiny_minima(self):
        f3 = make_field(3)
        assert minimal_circular_exact(f3, "radius").size == 2
        assert minimal_circular_exact(f3, "center").size == 3

    def test_frozen_perfect_difference_set(self):
        # q = 7 admits a 3-element difference cover
        out = minimal_circular_exact(make_field(7), "radius")
        assert out.size == 3
        assert out.example == (0, 1, 3)

    @pytest.mark.parametrize("q", SMALL_Q)
    @pytest.mark.parametrize("kind", ["radius", "center"])
    def test_result_covers_and_respects_lower_bound(self, q, kind):
        f = make_field(*prime_power_decompose(q))
        out = minimal_circular_exact(f, kind)
        assert out.certified
        assert out.q == q and out.kind == kind
        assert len(out.example) == out.size
        assert _cover_fn(kind)(f, list(out.example))
        dmin, smin = circular_lower_bounds(q)
        assert out.size >= (dmin if kind == "radius" else smin)

    @pytest.mark.parametrize("q", SMALL_Q)
    @pytest.mark.parametrize("kind", ["radius", "center"])
    def test_minimum_certified_by_unpruned_enumeration(self, q, kind):
        f = make_field(*prime_power_decompose(q))
        out = minimal_circular_exact(f, kind)
        assert exhaustive_cover_exists(f, kind, out.size)
        assert not exhaustive_cover_exists(f, kind, out.size - 1)

    @pytest.mark.parametrize("kind", ["radius", "center"])
    def test_deterministic(self, kind):
        f = make_field(11)
        a = minimal_circular_exact(f, kind)
        b = minimal_circular_exact(f, kind)
        assert a == b

    def test_normalization_keeps_zero_and_one(self):
        for q in SMALL_Q:
            f = make_field(*prime_power_decompose(q))
            out = minimal_circular_exact(f, "radius")
            assert out.example[0] == 0
            if out.size >= 2:
                assert out.example[1] == 1

    def test_limit_guard(self):
        with pytest.raises(BudgetExceededError):
            minimal_circular_exact(make_field(17), "radius")
        out = minimal_circular_exact(make_field(17), "radius", limit=17)
        assert out.certified and out.size >= circular_lower_bounds(17)[0]

    def test_node_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            minimal_circular_exact(make_field(13), "center", node_budget=3)

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            minimal_circular_exact(make_field(5), "sideways")

    def test_never_beats_the_explicit_constructions(self):
        from ffkakeya import circular_prime, circular_square
        for p in (3, 5, 7, 11, 13):
            out = minimal_circular_exact(make_field(p), "radius")
            assert out.size <= circular_prime(p, "radius").size
        out = minimal_circular_exact(make_field(3, 2), "radius")
        assert out.size <= circular_square(make_field(3, 2), "radius").size


class TestGreedy:
    @pytest.mark.parametrize("q", SMALL_Q)
    @pytest.mark.parametrize("kind", ["radius", "center"])
    def test_never_beats_exact_and_always_covers(self, q, kind):
        f = make_field(*prime_power_decompose(q))
        greedy = greedy_circular(f, kind)
        exact = minimal_circular_exact(f, kind)
        assert not greedy.certified
        assert _cover_fn(kind)(f, list(greedy.example))
        assert greedy.size >= exact.size

    @pytest.mark.parametrize("kind", ["radius", "center"])
    def test_scales_past_the_exact_limit(self, kind):
        f = make_field(5, 2)
        out = greedy_circular(f, kind)
        assert _cover_fn(kind)(f, list(out.example))
        dmin, smin = circular_lower_bounds(25)
        assert out.size >= (dmin if kind == "radius" else smin)

    def test_bracketed_by_lower_bound_and_construction_at_q25(self):
        from ffkakeya import circular_square
        f = make_field(5, 2)
        out = greedy_circular(f, "radius")
        assert circular_lower_bounds(25)[0] <= out.size
        assert out.size <= circular_square(f, "radius").size

    def test_deterministic(self):
        f = make_field(13)
        assert greedy_circular(f, "radius") == greedy_circular(f, "radius")


class TestOutcomeSerialization:
    def test_exact_json_uses_minimal_size(self):
        out = minimal_circular_exact(make_field(7), "radius")
        d = out.to_json_dict()
        assert d["minimalSize"] == 3
        assert d["certified"] is True
        assert d["exampleSet"] == [0, 1, 3]
        assert "foundSize" not in d

    def test_greedy_json_uses_found_size(self):
        out = greedy_circular(make_field(7), "radius")
        d = out.to_json_dict()
        assert d["certified"] is False
        assert "foundSize" in d and "minimalSize" not in d
