import random

from hypothesis import given
from hypothesis import strategies as st

from stickgraph.model import fixture, ordered_matrix
from stickgraph.oracle import enumerate_valid_orders
from stickgraph.patterns import PatternWitness, check_ab_order, find_forbidden, find_forbidden_naive

from conftest import instances

matrices = st.integers(1, 6).flatmap(
    lambda n: st.integers(1, 6).flatmap(
        lambda m: st.lists(st.lists(st.integers(0, 1), min_size=m, max_size=m), min_size=n, max_size=n)))


def test_g2_both_orders_contain_p2():
    g2 = fixture("G2")
    w = check_ab_order(g2, (1, 2))
    assert w == PatternWitness("P2", (1, 2, 3), (1, 2))
    w = check_ab_order(g2, (2, 1))
    assert w.kind == "P2" and w.rows == (2, 3, 4)


def test_g1_fig_order_is_pattern_free():
    assert check_ab_order(fixture("G1"), (4, 2, 1, 3)) is None


def test_all_ones_has_no_pattern():
    assert find_forbidden([[1] * 4 for _ in range(3)]) is None


def test_witness_rendering():
    w = check_ab_order(fixture("G2"), (1, 2))
    assert w.render((1, 2)) == "PATTERN P2 rows=a1,a2,a3 cols=b1,b2"


def test_each_template_is_detected():
    p1 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    p3 = [[0, 1, 0], [1, 0, 1]]
    assert find_forbidden(p1).kind == "P1"
    assert find_forbidden(p3).kind == "P3"


@given(matrices)
def test_fast_scan_agrees_with_template_enumeration(m):
    fast, naive = find_forbidden(m), find_forbidden_naive(m)
    assert (fast is None) == (naive is None)
    if fast is not None:
        assert fast.matches(m)


@given(matrices, st.randoms(use_true_random=False))
def test_column_deletion_keeps_matrices_pattern_free(m, rnd):
    if find_forbidden(m) is not None:
        return
    keep = sorted(rnd.sample(range(len(m[0])), rnd.randint(1, len(m[0]))))
    assert find_forbidden([[r[q] for q in keep] for r in m]) is None


@given(instances(max_a=5, max_b=4))
def test_pattern_free_iff_some_layout_realizes_the_b_order(inst):
    realized = {tuple(o.b_order()) for o in enumerate_valid_orders(inst, force=True)}
    from itertools import permutations
    for p in permutations(range(1, inst.n_b + 1)):
        assert (check_ab_order(inst, p) is None) == (p in realized)
