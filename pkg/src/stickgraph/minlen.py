"""Minimum-length representations.

Exact on N-overlap instances (the canonical representation) and for a fixed
B order (left compaction).  The general case gets a local-search heuristic
with no optimality guarantee, plus an exhaustive baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .closure import CycleCertificate, ForcedRelation, forcing_closure
from .cso import NotAStickCertificate, Rejection, run_cso
from .model import GroundOrder, Instance, interleave, check_b_order
from .oracle import MAX_B, GuardError, enumerate_valid_orders
from .patterns import PatternWitness, check_ab_order
from .representation import (RepresentationError, StickRepresentation, build_representation,
                             total_length, verify_representation)


class NotNOverlapError(ValueError):
    pass


class NotAStickError(ValueError):
    def __init__(self, certificate):
        super().__init__(f"not A-Stick: {certificate.render()}")
        self.certificate = certificate


class PatternError(ValueError):
    def __init__(self, witness: PatternWitness, b_order):
        super().__init__(witness.render(b_order))
        self.witness = witness


class SwapPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SwapContext:
    order: GroundOrder
    b_t: int
    b_s: int
    c: int
    chains: tuple[tuple[int, ...], ...]  # A indices of one chain per reachable end, from a_c
    v_st: int


def is_n_overlap(inst: Instance) -> bool:
    sets = [set(nb) for nb in inst.nbrs_b]
    for x in range(len(sets)):
        for y in range(x + 1, len(sets)):
            if sets[x] <= sets[y] or sets[y] <= sets[x]:
                return False
    return True


def try_representation(inst: Instance, order: GroundOrder) -> StickRepresentation | None:
    """The steady shortest representation of ``order`` if it realizes E, else None."""
    try:
        rep = build_representation(inst, order)
    except RepresentationError:
        return None
    return rep if verify_representation(inst, rep) is None else None


def ab_minlen(inst: Instance, b_order) -> StickRepresentation:
    """Shortest representation with both orders fixed: each B as far left as allowed."""
    b_order = check_b_order(inst, b_order)
    w = check_ab_order(inst, b_order)
    if w is not None:
        raise PatternError(w, b_order)
    slots = []
    floor = 0
    for j in b_order:
        floor = max(floor, inst.N_b(j)[-1])
        slots.append(floor)
    rep = try_representation(inst, interleave(inst.n_a, b_order, slots))
    if rep is None:
        raise RepresentationError("left compaction failed on a pattern-free order")
    return rep


def _consecutive(order: GroundOrder, b_t: int, b_s: int):
    bs = order.b_order()
    try:
        x = bs.index(b_t)
    except ValueError:
        raise SwapPreconditionError(f"b{b_t} not in order") from None
    if x + 1 >= len(bs) or bs[x + 1] != b_s:
        raise SwapPreconditionError(f"b{b_t} and b{b_s} are not consecutive B-origins")


def limit_of(inst: Instance, order: GroundOrder, b_t: int, b_s: int) -> SwapContext:
    """Explore alternate chains from a_c and return the smallest reachable A index."""
    _consecutive(order, b_t, b_s)
    ns = set(inst.N_b(b_s))
    rest = [x for x in inst.N_b(b_t) if x not in ns]
    if not rest:
        raise ValueError(f"N(b{b_t}) is contained in N(b{b_s}); the limit is undefined")
    c = rest[0]
    parent = {c: 0}
    stack = [c]
    while stack:
        x = stack.pop()
        for y in inst.N_a(x):
            for x2 in inst.N_b(y):
                if x2 >= x:
                    break
                if x2 not in ns and x2 not in parent:
                    parent[x2] = x
                    stack.append(x2)
    ends = []
    for x in sorted(parent):
        # a chain end cannot be extended any further
        if not any(x2 < x and x2 not in ns for y in inst.N_a(x) for x2 in inst.N_b(y)):
            ends.append(x)
    chains = []
    for x in ends:
        path = [x]
        while parent[path[-1]]:
            path.append(parent[path[-1]])
        chains.append(tuple(reversed(path)))
    return SwapContext(order, b_t, b_s, c, tuple(chains), min(parent))


def swap_to_limit(order: GroundOrder, b_s: int, v: int) -> GroundOrder:
    items = [o for o in order.items if o != ("b", b_s)]
    k = items.index(("a", v))
    items.insert(k, ("b", b_s))
    return GroundOrder(tuple(items))


def good_swap(inst: Instance, order: GroundOrder, b_t: int, b_s: int,
              rel: ForcedRelation | None = None) -> GroundOrder | None:
    """Move b_s right before its limit when 1_s <= 1_t and b_t is not forced before b_s."""
    _consecutive(order, b_t, b_s)
    if rel is None:
        rel = forcing_closure(inst, keep_log=False)
        if isinstance(rel, CycleCertificate):
            raise NotAStickError(rel)
    if inst.N_b(b_s)[0] > inst.N_b(b_t)[0] or rel.b_precedes(b_t, b_s):
        return None
    ctx = limit_of(inst, order, b_t, b_s)
    return swap_to_limit(order, b_s, ctx.v_st)


def _accepted(inst: Instance):
    res = run_cso(inst)
    if isinstance(res, Rejection):
        raise NotAStickError(res.certificate)
    return res


def minlen_noverlap(inst: Instance) -> StickRepresentation:
    if not is_n_overlap(inst):
        raise NotNOverlapError("instance is not N-overlap")
    return build_representation(inst, _accepted(inst).order)


def local_search_minlen(inst: Instance, max_rounds: int = 10_000) -> StickRepresentation:
    """Heuristic: good swaps, then single B relocations, while length strictly drops."""
    order = _accepted(inst).order
    rel = forcing_closure(inst, keep_log=False)
    best = build_representation(inst, order)
    best_len = total_length(best)
    overlap = is_n_overlap(inst)
    for _ in range(max_rounds):
        improved = None
        for cand in _moves(inst, best.order, rel, overlap):
            rep = try_representation(inst, cand)
            if rep is not None and total_length(rep) < best_len:
                improved = rep
                break
        if improved is None:
            break
        best, best_len = improved, total_length(improved)
    return best


def _moves(inst: Instance, order: GroundOrder, rel: ForcedRelation, overlap: bool):
    bs = order.b_order()
    if overlap:
        for b_t, b_s in zip(bs, bs[1:]):
            out = good_swap(inst, order, b_t, b_s, rel)
            if out is not None:
                yield out
    n = len(order.items)
    for o in order.items:
        if o[0] != "b":
            continue
        rest = [x for x in order.items if x != o]
        for k in range(n):
            cand = rest[:k] + [o] + rest[k:]
            if cand != list(order.items):
                yield GroundOrder(tuple(cand))


def brute_minlen(inst: Instance, exhaustive: bool = False, force: bool = False,
                 max_b: int = MAX_B) -> StickRepresentation:
    """Exact minimum length.

    By default every pattern-free B order is compacted to the left, which is
    optimal for that B order; ``exhaustive`` checks every valid interleaving.
    Ties go to the lexicographically smallest order.
    """
    if inst.n_b > max_b and not force:
        raise GuardError(f"|B|={inst.n_b} exceeds {max_b}")
    best = None
    if exhaustive:
        cands = (build_representation(inst, o) for o in enumerate_valid_orders(inst, force=force))
    else:
        cands = (ab_minlen(inst, p) for p in permutations(range(1, inst.n_b + 1))
                 if check_ab_order(inst, p) is None)
    for rep in cands:
        key = (total_length(rep), rep.order.items)
        if best is None or key < best[0]:
            best = (key, rep)
    if best is None:
        raise NotAStickError(_no_order(inst))
    return best[1]


def _no_order(inst: Instance):
    res = run_cso(inst)
    if isinstance(res, Rejection):
        return res.certificate
    raise AssertionError("brute force found no order for an accepted instance")


def canonical_orders(inst: Instance, force: bool = False) -> list[GroundOrder]:
    """Every canonical order, by placing each B permutation left-optimally."""
    if inst.n_b > MAX_B and not force:
        raise GuardError(f"|B|={inst.n_b} exceeds {MAX_B}")
    rel = forcing_closure(inst, keep_log=False)
    if isinstance(rel, CycleCertificate):
        return []
    from .cso import is_canonical_order

    out = set()
    for p in permutations(range(1, inst.n_b + 1)):
        slots = [rel.m[j] for j in p]
        if slots != sorted(slots):
            continue
        order = interleave(inst.n_a, p, slots)
        if is_canonical_order(inst, order, rel) and try_representation(inst, order) is not None:
            out.add(order.items)
    return [GroundOrder(o) for o in sorted(out)]
