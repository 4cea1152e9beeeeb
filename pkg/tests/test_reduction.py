import random

import pytest

from cubicforms import (
    IDENTITY,
    U1,
    W,
    CubicForm,
    act,
    discriminant,
)
from cubicforms.forms import u_of
from cubicforms.reduction import (
    SMALL_MATRICES,
    canonical_reduce,
    orbit_bfs,
    stabilizer_order,
)

rng = random.Random(999)


def random_unimodular(rng, steps=8):
    g = IDENTITY
    for _ in range(steps):
        if rng.random() < 0.5:
            g = g @ u_of(rng.randint(-3, 3))
        else:
            g = g @ W
    return g


def random_nondegenerate(rng, bound=10):
    while True:
        f = tuple(rng.randint(-bound, bound) for _ in range(4))
        if discriminant(f) != 0:
            return f


def test_small_matrix_count():
    assert len(SMALL_MATRICES) == 20
    assert all(g.det == 1 for g in SMALL_MATRICES)


def test_canonical_reduce_is_orbit_constant():
    for _ in range(400):
        f = random_nondegenerate(rng)
        g = random_unimodular(rng)
        assert canonical_reduce(act(g, f)) == canonical_reduce(f)


def test_canonical_reduce_same_orbit_example():
    f = (0, 1, -1, 0)
    assert canonical_reduce(act(U1, f)) == canonical_reduce(f)


def test_canonical_reduce_stays_in_orbit():
    # the representative must be BFS-reachable from the input
    for _ in range(60):
        f = random_nondegenerate(rng, bound=4)
        rep = canonical_reduce(f)
        closure = orbit_bfs(f, cap=64)
        assert tuple(rep) in closure


def test_canonical_reduce_adjudicated_by_bfs():
    f1, f2 = (1, 0, -3, 1), (1, 3, 0, -1)
    same_rep = canonical_reduce(f1) == canonical_reduce(f2)
    same_orbit = tuple(CubicForm(*f2)) in orbit_bfs(f1, cap=64)
    assert same_rep == same_orbit


def test_canonical_reduce_rejects_degenerate():
    with pytest.raises(ValueError):
        canonical_reduce((1, 3, 3, 1))


def test_orbit_bfs_contains_generator_images():
    f = (0, 1, -1, 0)
    closure = orbit_bfs(f, cap=3)
    assert f in closure
    assert tuple(act(W, f)) in closure


def test_orbit_bfs_cap_boundary():
    f = (5, 0, 0, 7)
    closure = orbit_bfs(f, cap=2)
    assert closure == {f}


def test_orbit_bfs_shared_closures():
    for _ in range(40):
        f = random_nondegenerate(rng, bound=3)
        if abs(discriminant(f)) > 100:
            continue
        closure = orbit_bfs(f, cap=64)
        other = next(iter(closure))
        assert orbit_bfs(other, cap=64) == closure


def test_stabilizer_order_examples():
    assert stabilizer_order((0, 1, -1, 0)) == 3
    assert stabilizer_order((1, 0, -1, 0)) == 1
    assert stabilizer_order((1, 0, -3, 1)) == 3


def test_stabilizer_order_is_orbit_constant():
    for _ in range(100):
        f = random_nondegenerate(rng, bound=5)
        g = random_unimodular(rng, steps=4)
        assert stabilizer_order(act(g, f)) == stabilizer_order(f)


def test_no_negative_discriminant_stab3():
    # forms with P < 0 never have a stabilizer of order 3
    count = 0
    for _ in range(300):
        f = random_nondegenerate(rng, bound=6)
        if discriminant(f) < 0:
            count += 1
            assert stabilizer_order(f) == 1
    assert count > 50
