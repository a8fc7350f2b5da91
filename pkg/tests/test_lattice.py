import math
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sperner_lattice.lattice import (
    DomainError,
    check_params,
    checked_int,
    enum_delta_points,
    enum_monotone_points,
    is_lattice_point,
    is_monotone_point,
    lattice_to_monotone,
    monotone_to_lattice,
    num_points,
    rank_point,
    unrank_point,
    vertex_id,
    vertex_index,
    vertex_point,
)

GRID = [(k, q) for k in range(2, 7) for q in range(1, 7)]


def brute_compositions(k, q):
    return sorted(p for p in product(range(q + 1), repeat=k) if sum(p) == q)


def brute_monotone(k, q):
    return sorted(p for p in product(range(q + 1), repeat=k - 1) if list(p) == sorted(p))


def test_delta_examples():
    assert enum_delta_points(2, 1) == ((0, 1), (1, 0))
    pts = enum_delta_points(3, 2)
    assert len(pts) == 6
    assert {(2, 0, 0), (1, 1, 0), (0, 0, 2)} <= set(pts)
    assert len(enum_delta_points(4, 3)) == 20


def test_monotone_examples():
    assert enum_monotone_points(2, 3) == ((0,), (1,), (2,), (3,))
    assert enum_monotone_points(3, 2) == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
    assert enum_monotone_points(3, 1) == ((0, 0), (0, 1), (1, 1))


@pytest.mark.parametrize("k,q", GRID)
def test_enumerations_match_brute_force(k, q):
    assert list(enum_delta_points(k, q)) == brute_compositions(k, q)
    assert list(enum_monotone_points(k, q)) == brute_monotone(k, q)
    n = math.comb(q + k - 1, k - 1)
    assert len(enum_delta_points(k, q)) == len(enum_monotone_points(k, q)) == num_points(k, q) == n


@pytest.mark.parametrize("k,q", [(1, 3), (0, 1), (3, 0), (2, -1), (17, 1), (2, 65)])
def test_domain_errors(k, q):
    with pytest.raises(DomainError):
        enum_delta_points(k, q)
    with pytest.raises(DomainError):
        enum_monotone_points(k, q)


def test_params_must_be_int():
    with pytest.raises(DomainError):
        check_params(2.0, 1)


def test_checked_int_overflow():
    assert checked_int(2**63 - 1) == 2**63 - 1
    with pytest.raises(OverflowError):
        checked_int(2**63)


def test_phi_examples():
    assert monotone_to_lattice((0, 0), 2) == (0, 0, 2)
    assert monotone_to_lattice((0, 1), 2) == (0, 1, 1)
    assert monotone_to_lattice((1, 1), 2) == (1, 0, 1)
    assert lattice_to_monotone((0, 0, 2)) == (0, 0)
    assert lattice_to_monotone((1, 0, 1)) == (1, 1)
    assert lattice_to_monotone((2, 0, 0)) == (2, 2)


@pytest.mark.parametrize("k,q", GRID)
def test_phi_is_bijection(k, q):
    ws = enum_monotone_points(k, q)
    vs = [monotone_to_lattice(w, q) for w in ws]
    assert all(is_lattice_point(v, k, q) for v in vs)
    assert sorted(vs) == list(enum_delta_points(k, q))
    assert [lattice_to_monotone(v) for v in vs] == list(ws)
    for v in enum_delta_points(k, q):
        assert monotone_to_lattice(lattice_to_monotone(v), q) == v


def test_vertex_ids():
    pts = enum_delta_points(3, 3)
    assert vertex_id(pts[0]) == 0
    assert vertex_id(pts[-1]) == math.comb(5, 2) - 1
    for i, p in enumerate(pts):
        assert vertex_id(p) == i
        assert vertex_point(i, 3, 3) == p
    with pytest.raises(KeyError):
        vertex_id((1, 1, 2), 3)
    with pytest.raises(KeyError):
        vertex_point(10, 3, 3)
    with pytest.raises(KeyError):
        vertex_index(3, 3).id_of((3, 0))


@pytest.mark.parametrize("k,q", GRID)
def test_rank_matches_enumeration(k, q):
    for i, p in enumerate(enum_delta_points(k, q)):
        assert rank_point(p) == i
        assert unrank_point(i, k, q) == p


@given(st.lists(st.integers(0, 3), min_size=2, max_size=5).filter(lambda v: sum(v) > 0))
def test_phi_round_trip_property(v):
    v = tuple(v)
    q = sum(v)
    w = lattice_to_monotone(v)
    assert is_monotone_point(w, len(v), q)
    assert monotone_to_lattice(w, q) == v
    assert vertex_index(len(v), q).id_of_monotone(w) == rank_point(v)


def test_membership_predicates():
    assert is_monotone_point((0, 1, 1), 4, 2)
    assert not is_monotone_point((1, 0), 3, 2)
    assert not is_monotone_point((0, 3), 3, 2)
    assert not is_lattice_point((1, -1, 2), 3, 2)
