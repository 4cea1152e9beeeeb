from fractions import Fraction

import numpy as np
import pytest

from cubicforms import (
    brute_force_classes,
    discriminant,
    enumerate_classes,
    is_irreducible,
    lattice_member,
    master_classes,
)
from cubicforms.reduction import canonical_reduce, stabilizer_order


def test_master_rows_are_canonical_distinct_classes():
    m = master_classes(500)
    seen = set(map(tuple, m.reps.tolist()))
    assert len(seen) == len(m)
    # spot-check invariants on a sample
    idx = np.linspace(0, len(m) - 1, 60).astype(int)
    for i in idx:
        rep = tuple(int(t) for t in m.reps[i])
        assert discriminant(rep) == int(m.disc[i])
        assert canonical_reduce(rep) == rep or tuple(canonical_reduce(rep)) in seen
        assert stabilizer_order(rep) == int(m.stab[i])
        assert is_irreducible(rep) == bool(m.irred[i])
        for lat in range(1, 11):
            assert lattice_member(rep, lat) == bool(m.member[i, lat - 1])


def test_master_cache_filters_down():
    big = master_classes(400)
    small = master_classes(150)
    assert small.limit == 150
    assert (np.abs(small.disc) <= 150).all()
    assert len(small) < len(big)


def test_master_workers_deterministic():
    a = master_classes(300, workers=1, use_cache=False)
    b = master_classes(300, workers=2, use_cache=False)
    order_a = np.lexsort(a.reps.T)
    order_b = np.lexsort(b.reps.T)
    assert (a.reps[order_a] == b.reps[order_b]).all()


def test_enumerate_classes_examples():
    recs = enumerate_classes(1, "+", 1)
    assert len(recs) == 1
    assert recs[0].n == 1 and recs[0].stab_order == 3 and not recs[0].irreducible

    recs = enumerate_classes(1, "-", 23)
    at23 = [r for r in recs if r.n == 23]
    assert len(at23) == 3 and all(r.stab_order == 1 for r in at23)

    recs = enumerate_classes(4, "+", 3)
    total = sum(Fraction(1, r.stab_order) for r in recs if r.n == 3)
    assert total == Fraction(1, 3)


def test_enumerate_classes_sorted_and_in_lattice():
    recs = enumerate_classes(7, "-", 60)
    assert recs == sorted(recs, key=lambda r: r.sort_key())
    for r in recs:
        assert lattice_member(r.rep, 7)
        assert discriminant(r.rep) == -r.n


def test_enumerate_classes_bad_args():
    with pytest.raises(ValueError):
        enumerate_classes(1, "x", 10)
    with pytest.raises(ValueError):
        enumerate_classes(1, "+", 0)


def test_brute_force_tiny():
    recs = brute_force_classes(1, "+", 1, box=2)
    assert len(recs) == 1 and recs[0].stab_order == 3


def test_brute_force_matches_enumeration_small():
    for lattice, sign, max_index, box in [
        (1, "+", 60, 30),
        (1, "-", 60, 30),
        (5, "-", 100, 30),
        (2, "+", 4, 30),
    ]:
        fast = enumerate_classes(lattice, sign, max_index)
        slow = brute_force_classes(lattice, sign, max_index, box=box)
        a = sorted((r.n, r.stab_order, r.irreducible) for r in fast)
        b = sorted((r.n, r.stab_order, r.irreducible) for r in slow)
        assert a == b, (lattice, sign)


def test_reducible_count_growth():
    # reducible negative-discriminant classes in L1 number ~ (pi^2/12) X
    m = master_classes(50000)
    sel = (m.disc < 0) & ~m.irred
    count = int(sel.sum())
    expect = (np.pi ** 2 / 12) * 50000
    assert abs(count - expect) < 0.05 * expect


def test_json_roundtrip():
    recs = enumerate_classes(9, "+", 40)
    for r in recs:
        d = r.to_json_dict()
        assert d["lattice"] == 9 and d["sign"] == "+"
        assert discriminant(d["rep"]) == d["n"]
