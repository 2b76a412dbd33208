import pytest
from hypothesis import given

from stickgraph.closure import forcing_closure
from stickgraph.genbench import noverlap_corpus
from stickgraph.minlen import (NotAStickError, NotNOverlapError, PatternError, SwapPreconditionError,
                               ab_minlen, brute_minlen, canonical_orders, good_swap, is_n_overlap,
                               limit_of, local_search_minlen, minlen_noverlap, swap_to_limit,
                               try_representation)
from stickgraph.model import GroundOrder, Instance, fixture
from stickgraph.oracle import GuardError, enumerate_valid_orders
from stickgraph.representation import build_representation, total_length
from stickgraph.cso import run_cso
from itertools import permutations

from conftest import instances


def length(rep):
    return total_length(rep)


def test_n_overlap(g1, g3, single):
    assert is_n_overlap(g1) and is_n_overlap(single) and not is_n_overlap(g3)


def test_ab_minlen_examples(g1, g3, single, g2):
    rep = ab_minlen(g1, (4, 2, 1, 3))
    assert (str(rep.order), length(rep)) == ("a1 a2 b4 a3 a4 b2 a5 b1 b3", 38)
    rep = ab_minlen(g3, (2, 1))
    assert (str(rep.order), length(rep)) == ("a1 a2 a3 a4 a5 a6 b2 b1", 31)
    assert length(ab_minlen(single, (1,))) == 2
    with pytest.raises(PatternError, match="P2"):
        ab_minlen(g2, (1, 2))


def test_limit_examples(g5, g3):
    ctx = limit_of(g5, GroundOrder.parse("a1 a2 a3 b2 b1"), 2, 1)
    assert (ctx.c, ctx.v_st, ctx.chains) == (3, 3, ((3,),))
    with pytest.raises(ValueError):
        limit_of(g3, GroundOrder.parse("a1 a2 a3 a4 a5 b1 a6 b2"), 1, 2)


def test_limit_follows_chains():
    # b3 links a3 back to a2; a2 is not adjacent to b_s = b2
    inst = Instance.from_neighborhoods(4, [[3, 4], [4], [2, 3]])
    ctx = limit_of(inst, GroundOrder.parse("a1 a2 a3 b3 a4 b1 b2"), 1, 2)
    assert (ctx.c, ctx.v_st) == (3, 2)
    assert ctx.chains == ((3, 2),)


def test_good_swap_examples(g5, g1):
    before = GroundOrder.parse("a1 a2 a3 b2 b1")
    after = good_swap(g5, before, 2, 1)
    assert str(after) == "a1 a2 b1 a3 b2"
    assert (length(build_representation(g5, before)), length(build_representation(g5, after))) == (14, 11)
    assert good_swap(g5, after, 1, 2) is None
    with pytest.raises(SwapPreconditionError):
        good_swap(g1, GroundOrder.parse("a1 a2 b4 a3 a4 b2 a5 b1 b3"), 4, 1)


def test_minlen_noverlap(g1, g5, g3, g2):
    rep = minlen_noverlap(g1)
    assert (str(rep.order), length(rep)) == ("a1 a2 b4 a3 a4 b2 a5 b1 b3", 38)
    rep = minlen_noverlap(g5)
    assert (str(rep.order), length(rep)) == ("a1 a2 b1 a3 b2", 11)
    with pytest.raises(NotNOverlapError):
        minlen_noverlap(g3)
    with pytest.raises(NotAStickError):
        minlen_noverlap(g2)


def test_local_search(g1, g3, single, g2):
    assert length(local_search_minlen(g3)) == 31
    assert length(local_search_minlen(g1)) == 38
    assert length(local_search_minlen(single)) == 2
    with pytest.raises(NotAStickError):
        local_search_minlen(g2)


def test_brute(g1, g3, single, g2):
    assert [length(brute_minlen(g)) for g in (g3, g1, single)] == [31, 38, 2]
    with pytest.raises(NotAStickError):
        brute_minlen(g2)
    with pytest.raises(GuardError):
        brute_minlen(Instance.from_neighborhoods(1, [[1]] * 9))


@given(instances(max_a=6, max_b=4))
def test_ab_minlen_is_optimal_for_its_b_order(inst):
    best = {}
    for o in enumerate_valid_orders(inst, force=True):
        key = tuple(o.b_order())
        best[key] = min(best.get(key, 10**9), length(build_representation(inst, o)))
    for key, value in best.items():
        assert length(ab_minlen(inst, key)) == value


@given(instances(max_a=6, max_b=4))
def test_brute_default_matches_exhaustive(inst):
    if run_cso(inst).__class__.__name__ == "Rejection":
        return
    assert length(brute_minlen(inst)) == length(brute_minlen(inst, exhaustive=True, force=True))


@given(instances(max_a=6, max_b=5))
def test_local_search_never_worsens(inst):
    res = run_cso(inst)
    if res.__class__.__name__ == "Rejection":
        return
    rep = local_search_minlen(inst)
    assert try_representation(inst, rep.order) is not None
    assert length(rep) <= length(build_representation(inst, res.order))


def test_canonical_order_lemma_on_n_overlap_corpus():
    # in a canonical order b_t before b_s means b_t forced before b_s or 1_t < 1_s
    for inst in noverlap_corpus(60, seed=500):
        rel = forcing_closure(inst, keep_log=False)
        for order in canonical_orders(inst):
            bs = order.b_order()
            for x, t in enumerate(bs):
                for s in bs[x + 1:]:
                    assert rel.b_precedes(t, s) or inst.N_b(t)[0] < inst.N_b(s)[0]


def test_swap_result_keeps_other_origins_in_place():
    order = GroundOrder.parse("a1 a2 b1 a3 b2 b3")
    assert str(swap_to_limit(order, 3, 2)) == "a1 b3 a2 b1 a3 b2"
