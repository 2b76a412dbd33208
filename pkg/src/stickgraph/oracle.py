"""Exhaustive ground truth for small instances."""

from __future__ import annotations

from itertools import permutations

from .model import GroundOrder, Instance
from .patterns import check_ab_order

MAX_B = 8
MAX_ORIGINS = 12


class GuardError(ValueError):
    """Instance too large for exhaustive search."""


def brute_recognize(inst: Instance, force: bool = False) -> tuple[int, ...] | None:
    """Lexicographically smallest B order free of forbidden patterns, or None."""
    if inst.n_b > MAX_B and not force:
        raise GuardError(f"|B|={inst.n_b} exceeds {MAX_B}")
    for perm in permutations(range(1, inst.n_b + 1)):
        if check_ab_order(inst, perm) is None:
            return perm
    return None


def enumerate_valid_orders(inst: Instance, force: bool = False) -> list[GroundOrder]:
    """All ground orders whose steady shortest layout realizes exactly E.

    Orders are grown left to right.  When b_j is placed, every A-origin before
    it is final, and A_i reaches b_j exactly when a_i b_j is an edge or a_i
    still has a neighbor to come; B_j reaches A_i exactly when i >= one_j.
    Later origins cannot touch b_j, so each placement is checked once.
    """
    if inst.n_a + inst.n_b > MAX_ORIGINS and not force:
        raise GuardError(f"|A|+|B|={inst.n_a + inst.n_b} exceeds {MAX_ORIGINS}")
    n_a, n_b = inst.n_a, inst.n_b
    remaining = [0] + [len(nb) for nb in inst.nbrs_a]
    placed = [False] * (n_b + 1)
    items: list = []
    out: list[GroundOrder] = []

    def b_fits(j: int, next_a: int) -> bool:
        nb = inst.N_b(j)
        if nb[-1] >= next_a:
            return False
        nset = set(nb)
        return all(remaining[i] == 0 for i in range(nb[0], next_a) if i not in nset)

    # explicit stack of (next_a, candidate list, cursor); each frame owns one slot
    def candidates(next_a: int) -> list:
        c = [("a", next_a)] if next_a <= n_a else []
        c += [("b", j) for j in range(1, n_b + 1) if not placed[j] and b_fits(j, next_a)]
        return c

    stack = [[1, candidates(1), 0]]
    while stack:
        frame = stack[-1]
        next_a, cands, cur = frame
        if cur > 0:
            kind, x = items.pop()  # undo the previous choice of this frame
            if kind == "a":
                next_a -= 1
                frame[0] = next_a
            else:
                placed[x] = False
                for i in inst.N_b(x):
                    remaining[i] += 1
        if cur == len(cands):
            stack.pop()
            continue
        frame[2] = cur + 1
        kind, x = cands[cur]
        items.append((kind, x))
        if kind == "a":
            frame[0] = next_a + 1
        else:
            placed[x] = True
            for i in inst.N_b(x):
                remaining[i] -= 1
        if len(items) == n_a + n_b:
            out.append(GroundOrder(tuple(items)))
            continue
        stack.append([frame[0], candidates(frame[0]), 0])
    out.sort(key=lambda o: o.items)
    return out
