import random
from itertools import combinations_with_replacement
from math import gcd

import pytest

from gt_toolkit.actions import (CyclicAction, count_invariants, degree,
                                egz_factor, format_monomial,
                                invariant_monomials, is_invariant, mu_d)


def surface_actions(max_d):
    for d in range(3, max_d + 1):
        for a in range(1, d):
            for b in range(a + 1, d):
                if gcd(gcd(a, b), d) == 1:
                    yield CyclicAction(d, (0, a, b))


def test_action_validation():
    with pytest.raises(ValueError):
        CyclicAction(1, (0, 1))
    with pytest.raises(ValueError):
        CyclicAction(4, (0, 2))  # gcd(0, 2, 4) = 2
    with pytest.raises(ValueError):
        CyclicAction(5, (1,))
    assert CyclicAction(5, (0, 6, 13)).weights == (0, 1, 3)
    assert CyclicAction(2, (0, 1, 1, 1, 1)).n == 4  # d <= n is accepted


def test_action_dict_round_trip():
    action = CyclicAction(8, (0, 3, 5))
    assert CyclicAction.from_dict(action.to_dict()) == action
    with pytest.raises(ValueError):
        CyclicAction.from_dict({"weights": [0, 1]})


def test_is_invariant_examples():
    action = CyclicAction(5, (0, 1, 3))
    assert is_invariant(action, (2, 2, 1))
    assert not is_invariant(action, (4, 1, 0))
    assert is_invariant(CyclicAction(7, (0, 2, 5)), (7, 0, 0))
    with pytest.raises(ValueError):
        is_invariant(action, (1, 2))


def test_invariant_monomials_goldens():
    got = invariant_monomials(CyclicAction(5, (0, 1, 3)), 1)
    assert set(got.monomials) == {(5, 0, 0), (0, 5, 0), (0, 0, 5),
                                  (2, 2, 1), (1, 1, 3)}
    assert got.count == 5
    got = invariant_monomials(CyclicAction(8, (0, 3, 5)), 1)
    assert set(got.monomials) == {(8, 0, 0), (6, 1, 1), (4, 2, 2), (0, 8, 0),
                                  (2, 3, 3), (0, 4, 4), (0, 0, 8)}
    sextics = invariant_monomials(CyclicAction(3, (0, 1, 2)), 2)
    assert sextics.count == 10
    assert (4, 1, 1) in sextics.monomials and (2, 2, 2) in sextics.monomials


def test_invariant_monomials_canonical_order():
    for action in [CyclicAction(6, (0, 1, 3)), CyclicAction(5, (0, 2, 3))]:
        for t in (1, 2):
            monomials = invariant_monomials(action, t).monomials
            assert list(monomials) == sorted(monomials, reverse=True)
            assert len(set(monomials)) == len(monomials)


def test_mu_d_examples():
    assert mu_d(CyclicAction(3, (0, 1, 2))) == 4
    assert mu_d(CyclicAction(5, (0, 1, 3))) == 5
    assert mu_d(CyclicAction(4, (0, 1, 2, 3))) == 10


def _brute_force_count(action, t):
    total = t * action.d
    count = 0
    for cut in combinations_with_replacement(range(action.nvars), total):
        vec = [0] * action.nvars
        for i in cut:
            vec[i] += 1
        if is_invariant(action, tuple(vec)):
            count += 1
    return count


def test_count_matches_enumeration_surfaces():
    for action in surface_actions(12):
        for t in (1, 2, 3):
            assert count_invariants(action, t) == \
                invariant_monomials(action, t).count


def test_count_matches_brute_force_general_n():
    rng = random.Random(431)
    cases = []
    while len(cases) < 12:
        d = rng.randrange(3, 13)
        weights = tuple(rng.randrange(d) for _ in range(4))
        try:
            cases.append(CyclicAction(d, weights))
        except ValueError:
            continue
    for action in cases:
        for t in (1, 2):
            if t * action.d > 16:
                continue
            assert count_invariants(action, t) == _brute_force_count(action, t)


def test_pure_powers_always_invariant():
    rng = random.Random(5)
    for _ in range(25):
        d = rng.randrange(2, 15)
        weights = tuple(rng.randrange(d) for _ in range(rng.randrange(2, 5)))
        try:
            action = CyclicAction(d, weights)
        except ValueError:
            continue
        for i in range(action.nvars):
            v = tuple(d if k == i else 0 for k in range(action.nvars))
            assert is_invariant(action, v)


def test_egz_base_case():
    action = CyclicAction(5, (0, 1, 3))
    assert egz_factor(action, (2, 2, 1)) == [(2, 2, 1)]


def test_egz_goldens():
    action = CyclicAction(3, (0, 1, 2))
    assert egz_factor(action, (2, 2, 2)) == [(1, 1, 1), (1, 1, 1)]
    # the only split of x0^4*x1*x2 into two degree-3 invariants
    assert sorted(egz_factor(action, (4, 1, 1))) == [(1, 1, 1), (3, 0, 0)]


def test_egz_errors():
    action = CyclicAction(3, (0, 1, 2))
    with pytest.raises(ValueError):
        egz_factor(action, (2, 1, 0))  # degree 3 but not invariant
    with pytest.raises(ValueError):
        egz_factor(action, (2, 2, 0))  # degree not a multiple of 3
    with pytest.raises(ValueError):
        egz_factor(action, (0, 0, 0))


def test_egz_contract_sweep():
    for action in surface_actions(8):
        for t in (2, 3):
            for v in invariant_monomials(action, t).monomials:
                parts = egz_factor(action, v)
                assert len(parts) == t
                for p in parts:
                    assert degree(p) == action.d
                    assert is_invariant(action, p)
                assert tuple(map(sum, zip(*parts))) == v


def test_egz_nonzero_first_weight():
    action = CyclicAction(5, (1, 2, 3))
    for v in invariant_monomials(action, 2).monomials:
        parts = egz_factor(action, v)
        assert len(parts) == 2
        assert all(is_invariant(action, p) for p in parts)
        assert tuple(map(sum, zip(*parts))) == v


def test_format_monomial():
    assert format_monomial((2, 0, 1)) == "x0^2*x2"
    assert format_monomial((0, 0, 0)) == "1"
    assert format_monomial((0, 1, 0)) == "x1"
