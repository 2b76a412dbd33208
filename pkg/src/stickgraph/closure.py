"""Forced-pair closure: the baseline engine that CSO is checked against.

Rules, with k_j / one_j the largest / smallest neighbor index of b_j and
m_j the largest t with a_t forced before b_j:

* O   a_i before a_j for i < j
* A   a_t before b_j for every edge
* TB  one_j < t < k_j, a_t b_j not an edge, a_t b_h an edge  =>  b_h before b_j
* FB' k_j < t <= m_j, a_t b_h an edge                        =>  b_h before b_j
* T   transitivity

A-to-B pairs are summarized by m (a_t before b_j iff t <= m_j) and no rule
ever puts a B-origin before an A-origin, so only the B-to-B part is stored.
B-relations are bitmasks over 1-based B indices.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .model import GroundOrder, Instance, Origin


@dataclass(frozen=True)
class Derivation:
    rule: str  # "TB", "FB'", "FB" or "T"
    support: int  # A index of the support; 0 for T
    via: tuple[int, int] | None = None  # for T: the direct pair that triggered it


@dataclass
class ForcedRelation:
    n_a: int
    n_b: int
    succ: list[int]  # succ[h] bitmask of j with b_h before b_j; index 0 unused
    pred: list[int]
    m: list[int]  # m[j]; index 0 unused
    log: dict[tuple[int, int], Derivation] = field(default_factory=dict, repr=False)

    def b_precedes(self, h: int, j: int) -> bool:
        return bool(self.succ[h] >> j & 1)

    def precedes(self, x: Origin, y: Origin) -> bool:
        (kx, ix), (ky, iy) = x, y
        if kx == "a" and ky == "a":
            return ix < iy
        if kx == "a":
            return ix <= self.m[iy]
        if ky == "a":
            return False
        return self.b_precedes(ix, iy)

    def b_pairs(self) -> set[tuple[int, int]]:
        return {(h, j) for h in range(1, self.n_b + 1) for j in _bits(self.succ[h])}

    def extended_by(self, order: GroundOrder) -> bool:
        pos = order.positions()
        for h in range(1, self.n_b + 1):
            ph = pos[("b", h)]
            if pos[("a", self.m[h])] > ph:
                return False
            for j in _bits(self.succ[h]):
                if pos[("b", j)] < ph:
                    return False
        return True


@dataclass(frozen=True)
class CycleCertificate:
    cycle: tuple[int, ...]  # B indices c1, ..., ck, c1
    steps: tuple[Derivation, ...]  # derivation of each consecutive pair

    def render(self) -> str:
        return " < ".join(f"b{j}" for j in self.cycle)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Engine:
    def __init__(self, inst: Instance, literal_fb: bool, by_support: bool, keep_log: bool):
        self.inst = inst
        self.literal_fb = literal_fb
        self.by_support = by_support
        self.keep_log = keep_log
        nb = inst.n_b
        self.k = [0] + [nb_[-1] for nb_ in inst.nbrs_b]
        self.m = list(self.k)
        self.succ = [0] * (nb + 1)
        self.pred = [0] * (nb + 1)
        self.log: dict[tuple[int, int], Derivation] = {}
        self.direct: dict[int, list[tuple[int, Derivation]]] = {}
        self.queue: deque | list = [] if by_support else deque()
        self.seq = 0
        self.cycle: CycleCertificate | None = None

    def push(self, h: int, j: int, d: Derivation):
        if self.by_support:
            self.seq += 1
            heapq.heappush(self.queue, (d.support, self.seq, h, j, d))
        else:
            self.queue.append((h, j, d))

    def pop(self):
        if self.by_support:
            _, _, h, j, d = heapq.heappop(self.queue)
            return h, j, d
        return self.queue.popleft()

    def seed_tb(self):
        inst = self.inst
        for j, nb in enumerate(inst.nbrs_b, start=1):
            nset = set(nb)
            for t in range(nb[0] + 1, nb[-1]):
                if t not in nset:
                    d = Derivation("TB", t)
                    for h in inst.N_a(t):
                        self.push(h, j, d)

    def raise_m(self, y: int, value: int):
        """Set m_y to at least ``value`` and propagate to successors."""
        stack = [y]
        while stack:
            z = stack.pop()
            if value <= self.m[z]:
                continue
            old = self.m[z]
            self.m[z] = value
            if not self.literal_fb:
                for t in range(max(old, self.k[z]) + 1, value + 1):
                    d = Derivation("FB'", t)
                    for h in self.inst.N_a(t):
                        self.push(h, z, d)
            stack.extend(_bits(self.succ[z]))

    def add(self, h: int, j: int, d: Derivation) -> bool:
        """Add b_h before b_j and its transitive consequences; False on a cycle."""
        if self.succ[h] >> j & 1:
            return True
        if h == j or self.succ[j] >> h & 1:
            self.cycle = self.certificate(h, j, d)
            return False
        self.direct.setdefault(h, []).append((j, d))
        left = self.pred[h] | (1 << h)
        right = self.succ[j] | (1 << j)
        new_pairs = []
        for x in _bits(left):
            fresh = right & ~self.succ[x]
            if not fresh:
                continue
            self.succ[x] |= fresh
            for y in _bits(fresh):
                self.pred[y] |= 1 << x
                new_pairs.append((x, y))
                if self.keep_log:
                    self.log[(x, y)] = d if (x, y) == (h, j) else Derivation("T", 0, (h, j))
        mh = max(self.m[x] for x in _bits(left))
        for y in _bits(right):
            self.raise_m(y, mh)
        if self.literal_fb:
            for w, y in new_pairs:
                ky = self.k[y]
                for t in self.inst.N_b(w):
                    if t > ky:
                        dd = Derivation("FB", t)
                        for hh in self.inst.N_a(t):
                            self.push(hh, y, dd)
        return True

    def certificate(self, h: int, j: int, d: Derivation) -> CycleCertificate:
        # path j -> ... -> h over direct pairs, then close with (h, j)
        prev: dict[int, tuple[int, Derivation]] = {j: (0, d)}
        dq = deque([j])
        while dq and h not in prev:
            x = dq.popleft()
            for y, dy in self.direct.get(x, ()):
                if y not in prev:
                    prev[y] = (x, dy)
                    dq.append(y)
        path = [h]
        steps: list[Derivation] = []
        cur = h
        while cur != j:
            p, dp = prev[cur]
            steps.append(dp)
            path.append(p)
            cur = p
        path.reverse()
        steps.reverse()
        cyc = [h] + path  # h -> j -> ... -> h
        return CycleCertificate(tuple(cyc), tuple([d] + steps))

    def run(self):
        self.seed_tb()
        while self.queue:
            h, j, d = self.pop()
            if not self.add(h, j, d):
                return self.cycle
        return ForcedRelation(self.inst.n_a, self.inst.n_b, self.succ, self.pred, self.m, self.log)


def forcing_closure(inst: Instance, literal_fb: bool = False, by_support: bool = False,
                    keep_log: bool = True) -> ForcedRelation | CycleCertificate:
    """Least relation closed under O, A, TB, FB' (or literal FB) and T.

    ``by_support`` processes pending derivations in increasing support order.
    """
    return _Engine(inst, literal_fb, by_support, keep_log).run()


def m_values(rel: ForcedRelation) -> dict[int, int]:
    return {j: rel.m[j] for j in range(1, rel.n_b + 1)}


def weak_pairs(rel: ForcedRelation) -> set[tuple[int, int]]:
    out = set()
    for h in range(1, rel.n_b + 1):
        for j in range(1, rel.n_b + 1):
            if h != j and rel.m[h] < rel.m[j] and not rel.b_precedes(h, j) and not rel.b_precedes(j, h):
                out.add((h, j))
    return out


def canonical_from_relation(rel: ForcedRelation) -> GroundOrder:
    """Left-optimal extension: b_j right after a_{m_j}; ties by forced order, then index."""
    groups: dict[int, list[int]] = {}
    for j in range(1, rel.n_b + 1):
        groups.setdefault(rel.m[j], []).append(j)
    items: list[Origin] = []
    for i in range(1, rel.n_a + 1):
        items.append(("a", i))
        members = groups.get(i, [])
        inside = 0
        for j in members:
            inside |= 1 << j
        indeg = {j: (rel.pred[j] & inside).bit_count() for j in members}
        heap = [j for j in members if indeg[j] == 0]
        heapq.heapify(heap)
        while heap:
            j = heapq.heappop(heap)
            items.append(("b", j))
            for y in _bits(rel.succ[j] & inside):
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
    return GroundOrder(tuple(items))


def reference_canonical(inst: Instance) -> GroundOrder | CycleCertificate:
    rel = forcing_closure(inst, keep_log=False)
    if isinstance(rel, CycleCertificate):
        return rel
    return canonical_from_relation(rel)


def replay_cycle(inst: Instance, cyc: CycleCertificate) -> bool:
    """Check every step of a cycle against its rule's local conditions.

    FB' and FB steps are checked up to the forced a_t-before-b_j premise,
    which depends on the rest of the derivation.
    """
    c = cyc.cycle
    if len(c) < 3 or c[0] != c[-1] or len(cyc.steps) != len(c) - 1:
        return False
    for (h, j), d in zip(zip(c, c[1:]), cyc.steps):
        nb = inst.N_b(j)
        t = d.support
        if d.rule == "TB":
            ok = nb[0] < t < nb[-1] and t not in nb and h in inst.N_a(t)
        elif d.rule in ("FB'", "FB"):
            ok = t > nb[-1] and h in inst.N_a(t)
        else:
            ok = False
        if not ok:
            return False
    return True
