import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sperner_lattice.bounds import lower_bound, upper_bound
from sperner_lattice.labeling import Labeling, count_nonmono, first_choice_labeling, iter_sperner_labelings
from sperner_lattice.search import (
    BudgetExceeded,
    SearchConfig,
    branch_bound_min,
    brute_force_min,
    check_certificate_json,
    conjecture_probe,
    lex_min_labeling,
    load_certificate,
    minimize,
    verify_certificate,
    vertex_order_heuristic,
)
from sperner_lattice.triangulation import triangulate

# instances where the numpy brute force is quick
BRUTE_GRID = [(2, q) for q in range(1, 7)] + [(k, 1) for k in range(3, 6)] + [(k, 2) for k in range(3, 6)] + [
    (3, 3), (3, 4), (4, 3),
]


def pure_python_min(k, q):
    """Slow third route: enumerate labelings as objects and recount each."""
    t = triangulate(k, q)
    best = None
    for lab in iter_sperner_labelings(k, q):
        n = count_nonmono(t, lab)
        if best is None or n < best[0]:
            best = (n, lab)
    return best


@pytest.mark.parametrize("k,q", [(3, 2), (4, 2), (2, 4), (3, 3), (3, 1)])
def test_brute_matches_pure_python(k, q):
    m, lab = pure_python_min(k, q)
    r = brute_force_min(k, q)
    assert (r.m, r.witness) == (m, lab)


def test_brute_examples():
    assert brute_force_min(3, 2).m == 3
    assert brute_force_min(4, 2).m == 7
    assert brute_force_min(2, 4).m == 1


def test_brute_budget_refusal():
    with pytest.raises(BudgetExceeded) as err:
        brute_force_min(3, 5, budget=1000)
    assert err.value.size == 2**12 * 3**6
    assert "2985984" in str(err.value)


@pytest.mark.parametrize("k,q", BRUTE_GRID)
def test_branch_bound_matches_brute(k, q):
    bb, bf = branch_bound_min(k, q), brute_force_min(k, q)
    assert bb.m == bf.m
    assert bb.witness == bf.witness
    assert lower_bound(k, q) <= bb.m <= upper_bound(k, q)
    for r in (bb, bf):
        assert verify_certificate(k, q, r.witness, r.m)


def test_branch_bound_examples():
    r = branch_bound_min(3, 3)
    assert 3 <= r.m <= 5
    assert branch_bound_min(5, 2).m == 15
    r = branch_bound_min(4, 3)
    assert 6 <= r.m <= 19


def test_k4q3_beats_first_choice():
    # computed value, checked against brute force above; first choice gives 19
    assert branch_bound_min(4, 3).m == 18


def test_threads_give_identical_result():
    single = branch_bound_min(4, 3)
    multi = branch_bound_min(4, 3, SearchConfig(threads=2, split_depth=3))
    assert (multi.m, multi.witness) == (single.m, single.witness)


def test_lex_min_labeling_is_first_in_order():
    t = triangulate(3, 3)
    lab, _ = lex_min_labeling(t, 5)
    first = next(l for l in iter_sperner_labelings(3, 3) if count_nonmono(t, l) <= 5)
    assert lab == first
    with pytest.raises(ValueError):
        lex_min_labeling(t, 2)


def test_vertex_order_heuristic():
    order = vertex_order_heuristic(triangulate(3, 1))
    assert sorted(order) == [0, 1, 2]
    assert vertex_order_heuristic(triangulate(2, 5)) == list(range(6))
    t = triangulate(4, 3)
    assert vertex_order_heuristic(t) == vertex_order_heuristic(t)
    assert sorted(vertex_order_heuristic(t)) == list(range(t.num_vertices))


def test_certificate_examples():
    fc = first_choice_labeling(3, 2)
    assert verify_certificate(3, 2, fc, 3)
    assert not verify_certificate(3, 2, fc, 2)
    bad = Labeling(3, 2, (3, 2, 2, 2, 1, 1))  # (1,0,1) gets colour 2
    assert not verify_certificate(3, 2, bad, count_nonmono(triangulate(3, 2), fc))
    assert not verify_certificate(3, 3, fc, 3)


@settings(max_examples=20)
@given(st.sampled_from([(3, 2), (3, 3), (4, 2), (2, 5)]), st.integers(-2, 2))
def test_certificate_soundness(kq, delta):
    r = branch_bound_min(*kq)
    assert check_certificate_json(r.certificate_json())
    tampered = dict(r.to_certificate(), m=r.m + delta)
    assert check_certificate_json(json.dumps(tampered)) == (delta == 0)


def test_certificate_format():
    r = minimize(3, 2, "brute")
    cert = json.loads(r.certificate_json())
    assert list(cert) == ["k", "q", "m", "method", "colors", "nodes_explored"]
    assert cert["method"] == "brute"
    k, q, lab, m = load_certificate(r.certificate_json())
    assert (k, q, m) == (3, 2, 3) and lab == r.witness
    assert not check_certificate_json('{"k": 3}')
    assert not check_certificate_json("not json")


def test_minimize_dispatch():
    assert minimize(3, 2, "bb").method == "branch_bound"
    with pytest.raises(ValueError):
        minimize(3, 2, "sat")


def test_conjecture_probe_is_descriptive():
    assert conjecture_probe(branch_bound_min(3, 3))["meets_upper"] is True
    probe = conjecture_probe(branch_bound_min(4, 3))
    assert probe == {"k": 4, "q": 3, "lower": 6, "exact": 18, "upper": 19, "meets_upper": False}
