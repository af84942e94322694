import math

import pytest

from partial_lift.counting import (
    TripleCounts,
    brute_valid_pairs,
    brute_valid_triples,
    codimension_exponent,
    dominant_eigenvalue,
    growth_check,
    pairs_bound,
    recurse_counts,
    supported_pairs,
    triple_classes,
    valid_pair_set,
)
from partial_lift.field import make_field
from partial_lift.lift import e_st


def naive_triples(r):
    """Direct reading of the definition: all (y, c0, c1, a0, a1) in [2^r]^5."""
    size = 1 << r
    counts = {"no": 0, "yes": 0, "maybe": 0}
    for y in range(size):
        for c0 in range(size):
            for c1 in range(size):
                lo = hi = False
                for a0 in range(size):
                    for a1 in range(size):
                        if a0 & c0 == c0 and a1 & c1 == c1 and (a0 + a1) % size == y:
                            if a0 + a1 <= size - 1:
                                lo = True
                            else:
                                hi = True
                if lo and hi:
                    counts["maybe"] += 1
                elif lo:
                    counts["no"] += 1
                elif hi:
                    counts["yes"] += 1
    return counts["no"], counts["yes"], counts["maybe"]


@pytest.mark.parametrize("r", range(0, 4))
def test_triple_enumeration_matches_definition(r):
    assert brute_valid_triples(r).as_tuple() == naive_triples(r)


def test_triple_examples():
    assert brute_valid_triples(0).as_tuple() == (1, 0, 0)
    assert brute_valid_triples(1).as_tuple() == (3, 3, 1)
    assert recurse_counts(0).as_tuple() == (1, 0, 0)
    assert recurse_counts(1).as_tuple() == (3, 3, 1)
    assert recurse_counts(2).as_tuple() == (9, 31, 10)


def test_triple_r1_classes():
    assert triple_classes(1) == {
        (0, 0, 0): "maybe",
        (0, 0, 1): "yes",
        (0, 1, 0): "yes",
        (0, 1, 1): "yes",
        (1, 0, 0): "no",
        (1, 0, 1): "no",
        (1, 1, 0): "no",
    }


@pytest.mark.parametrize("r", range(0, 12))
def test_recursion_identities(r):
    n, y, m = recurse_counts(r).as_tuple()
    assert recurse_counts(r + 1).as_tuple() == (3 * n, 3 * n + 6 * y + 4 * m, n + y + 4 * m)
    assert min(n, y, m) >= 0


def test_recursion_exact_big_integers():
    c = recurse_counts(200)
    assert c.total.bit_length() > 128
    assert c.no_carry == 3**200


def test_limits():
    with pytest.raises(ValueError):
        brute_valid_triples(7)
    with pytest.raises(ValueError):
        recurse_counts(-1)
    with pytest.raises(ValueError):
        brute_valid_pairs(3)
    with pytest.raises(ValueError):
        pairs_bound(5)


def test_pairs_examples():
    assert brute_valid_pairs(2) == 3
    assert pairs_bound(2) == 8
    assert pairs_bound(4) == 60
    values = [brute_valid_pairs(ell) for ell in (2, 4, 6, 8)]
    assert values == sorted(values)


@pytest.mark.parametrize("ell", [2, 4, 6, 8])
def test_pairs_equal_e(ell):
    f = make_field(ell)
    assert brute_valid_pairs(ell) == e_st(f, (1 << ell // 2) - 1, f.q - 1)


@pytest.mark.parametrize("ell", [2, 4, 6, 8, 10])
def test_pairs_below_bound(ell):
    assert brute_valid_pairs(ell) <= pairs_bound(ell)


@pytest.mark.parametrize("ell", [2, 4, 6])
def test_support_accounting(ell):
    support = supported_pairs(ell)
    classes = triple_classes(ell // 2)
    assert set(support) == set(classes)
    covered = set().union(*support.values())
    assert covered == valid_pair_set(ell)
    for triple, pairs in support.items():
        limit = 2 if classes[triple] == "maybe" else 1
        assert len(pairs) <= limit


def test_growth():
    rows = growth_check(40)
    assert [r.ell for r in rows] == list(range(2, 41, 2))
    assert all(r.bound == pairs_bound(r.ell) for r in rows)
    ratios = [r.ratio for r in rows]
    assert max(ratios) < 1.2
    # consecutive bound ratio approaches 5 + sqrt 5
    last = rows[-1].bound / rows[-2].bound
    assert abs(last - (5 + math.sqrt(5))) / (5 + math.sqrt(5)) < 1e-6


def test_constants():
    assert round(codimension_exponent(), 4) == 0.7138
    assert dominant_eigenvalue() == pytest.approx(5 + math.sqrt(5))


def test_triplecounts_step():
    assert TripleCounts(0, 1, 0, 0).step() == TripleCounts(1, 3, 3, 1)
