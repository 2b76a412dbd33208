import pytest
from hypothesis import given

from stickgraph.closure import CycleCertificate, forcing_closure
from stickgraph.cso import Rejection, run_cso
from stickgraph.model import GroundOrder, Instance
from stickgraph.oracle import GuardError, brute_recognize, enumerate_valid_orders
from stickgraph.patterns import check_ab_order
from stickgraph.representation import build_representation, verify_representation

from conftest import instances


def test_examples(g1, g2, g5, single):
    assert brute_recognize(g2) is None
    perm = brute_recognize(g1)
    assert perm <= (4, 2, 1, 3) and check_ab_order(g1, perm) is None
    assert brute_recognize(single) == (1,)
    assert [str(o) for o in enumerate_valid_orders(single)] == ["a1 b1"]
    got = {str(o) for o in enumerate_valid_orders(g5)}
    assert {"a1 a2 b1 a3 b2", "a1 a2 a3 b2 b1"} <= got
    assert enumerate_valid_orders(g2) == []


def test_guards():
    big = Instance.from_neighborhoods(1, [[1]] * 9)
    with pytest.raises(GuardError):
        brute_recognize(big)
    with pytest.raises(GuardError):
        enumerate_valid_orders(Instance.from_neighborhoods(1, [[1]] * 12))
    assert brute_recognize(big, force=True) == tuple(range(1, 10))


@given(instances(max_a=5, max_b=4))
def test_enumeration_matches_filtering_every_order(inst):
    from itertools import permutations
    found = set()
    n = inst.n_a + inst.n_b
    for perm in permutations(range(1, inst.n_b + 1)):
        # every interleaving: choose which ground slots hold B-origins
        from itertools import combinations
        for slots in combinations(range(n), inst.n_b):
            items, a, b = [], 1, iter(perm)
            for p in range(n):
                if p in slots:
                    items.append(("b", next(b)))
                else:
                    items.append(("a", a))
                    a += 1
            order = GroundOrder(tuple(items))
            try:
                rep = build_representation(inst, order)
            except ValueError:
                continue
            if verify_representation(inst, rep) is None:
                found.add(order.items)
    assert [o.items for o in enumerate_valid_orders(inst)] == sorted(found)


@given(instances(max_a=6, max_b=5))
def test_recognition_triangle(inst):
    brute = brute_recognize(inst)
    cyclic = isinstance(forcing_closure(inst, keep_log=False), CycleCertificate)
    rejected = isinstance(run_cso(inst), Rejection)
    assert (brute is None) == cyclic == rejected
