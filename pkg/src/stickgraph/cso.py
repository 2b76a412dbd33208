"""Linear-time canonical order computation for A-Stick graphs.

The work DAG holds B-origins and connectors.  Its settled prefix is a chain
of small bubbles opened by connectors labeled a_i; ``first`` separates that
prefix from the working zone, which is a chain of main bubbles delimited by
the strong connectors ``first -> ... -> s0``.  Every B node has exactly one
previous and one next connector.

Step indices are doubled integers: 2i for a_i and 2i + 1 for the artificial
origin a_{i+1/2}.  ``last[j]`` is the current (possibly stale) largest
neighbor index of b_j, doubled.  Each connector keeps its B out-neighbors in
two sublists by parity of ``last`` so that a half step only walks B nodes
with a fractional value.

Stale values are refreshed at three points: members of the D' sub-DAG
(update 1), frontiers re-attached while closing D', and nodes collected by a
half step (update 2).  A stored value is never above the value the eager
rule would give and never below k_j, which is all the collection tests need.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .closure import CycleCertificate, ForcedRelation, forcing_closure
from .model import GroundOrder, Instance, Origin


class InvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class NotAStickCertificate:
    i: int  # step index (integer step)
    b_x: int  # not adjacent to a_i, precedes b_y
    b_y: int  # adjacent to a_i

    def render(self) -> str:
        return f"NOT A-STICK at step {self.i}: b{self.b_x} precedes b{self.b_y} in D, a{self.i}b{self.b_y} in E, a{self.i}b{self.b_x} not in E"


@dataclass
class TraceRow:
    step: str  # e.g. "3.2.5"
    what: str  # "D'", "D" or "F'"
    text: str

    def __str__(self):
        return f"{self.step} {self.what}: {self.text}"


def _above(y: int) -> int:
    """Smallest admissible Last after a predecessor with Last y (doubled); -1 stays -1."""
    return y + 1 if y >= 0 and y % 2 == 0 else y


def fmt_half(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d // 2}.5"


class WorkDag:
    """Arena of B nodes and connectors with both arc directions navigable."""

    def __init__(self, inst: Instance, debug: bool = False, trace: bool = False):
        self.inst = inst
        self.debug = debug
        self.tracing = trace
        self.trace: list[TraceRow] = []
        self.work = 0
        self.kept_shared = 0  # next connectors kept because of outside in-neighbors
        # per node
        self.bidx: list[int] = []  # B index, 0 for connectors
        self.prev: list[int] = []
        self.next: list[int] = []
        self.ins: list[dict | None] = []
        self.out_int: list[dict | None] = []
        self.out_frac: list[dict | None] = []
        self.out_c: list[dict | None] = []
        self.strong: list[bool] = []
        self.label: list[tuple[str, int]] = []  # ("s"|"a", doubled index)
        self.alive: list[bool] = []
        # per B index (1-based)
        self.bnode = [-1] * (inst.n_b + 1)
        self.last = [0] + [2 * nb[-1] for nb in inst.nbrs_b]
        self.settled = [False] * (inst.n_b + 1)
        self.a_node: dict[int, int] = {}  # doubled index -> connector labeled a_i
        self.next_strong: dict[int, int] = {}
        self.step = 0  # doubled index of the last completed step
        s0 = self._connector(True, ("s", 0))
        self.first = s0
        self.frozen = False

    # -- arena -------------------------------------------------------------
    def _node(self, bidx: int) -> int:
        self.bidx.append(bidx)
        self.prev.append(-1)
        self.next.append(-1)
        conn = bidx == 0
        self.ins.append({} if conn else None)
        self.out_int.append({} if conn else None)
        self.out_frac.append({} if conn else None)
        self.out_c.append({} if conn else None)
        self.strong.append(False)
        self.label.append(("b", 0))
        self.alive.append(True)
        return len(self.bidx) - 1

    def _connector(self, strong: bool, label) -> int:
        c = self._node(0)
        self.strong[c] = strong
        self.label[c] = label
        return c

    def _new_b(self, j: int) -> int:
        b = self._node(j)
        self.bnode[j] = b
        return b

    def is_b(self, v: int) -> bool:
        return self.bidx[v] != 0

    def _outs(self, c: int):
        return list(self.out_int[c]) + list(self.out_frac[c]) + list(self.out_c[c])

    def _out_b_count(self, c: int) -> int:
        return len(self.out_int[c]) + len(self.out_frac[c])

    def _link_cb(self, c: int, b: int):
        self.prev[b] = c
        (self.out_frac if self.last[self.bidx[b]] & 1 else self.out_int)[c][b] = None
        self.work += 1

    def _unlink_cb(self, c: int, b: int):
        self.prev[b] = -1
        (self.out_frac if self.last[self.bidx[b]] & 1 else self.out_int)[c].pop(b)
        self.work += 1

    def _link_bc(self, b: int, c: int):
        self.next[b] = c
        self.ins[c][b] = None
        self.work += 1

    def _unlink_bc(self, b: int, c: int):
        self.next[b] = -1
        self.ins[c].pop(b)
        self.work += 1

    def _link_cc(self, c1: int, c2: int):
        self.out_c[c1][c2] = None
        self.ins[c2][c1] = None
        self.work += 1

    def _unlink_cc(self, c1: int, c2: int):
        self.out_c[c1].pop(c2)
        self.ins[c2].pop(c1)
        self.work += 1

    def _unlink_in(self, x: int, c: int):
        if self.is_b(x):
            self._unlink_bc(x, c)
        else:
            self._unlink_cc(x, c)

    def _link_in(self, x: int, c: int):
        if self.is_b(x):
            self._link_bc(x, c)
        else:
            self._link_cc(x, c)

    def _move_out(self, src: int, b: int, dst: int):
        self._unlink_cb(src, b)
        self._link_cb(dst, b)

    def _set_last(self, b: int, value: int):
        j = self.bidx[b]
        old = self.last[j]
        if old == value:
            return
        p = self.prev[b]
        if p >= 0 and (old ^ value) & 1:
            (self.out_frac if old & 1 else self.out_int)[p].pop(b)
            (self.out_frac if value & 1 else self.out_int)[p][b] = None
        self.last[j] = value

    # -- bubble closing ----------------------------------------------------
    def _close(self, members: list[int], qconn: set, inq: Counter, mode: str, i2: int):
        """Close the bubble of the compact sub-DAG Q = {first} + members + their prevs.

        Returns the list of frontier B nodes that were re-attached.
        """
        first = self.first
        st = first
        while True:
            nx = self.next_strong.get(st)
            if nx is not None and nx in qconn:
                st = nx
                self.work += 1
            else:
                break
        su = self.next_strong.get(st)
        member_set = set(members)
        targets = [b for b in members if self.next[b] < 0 or self.next[b] not in qconn]
        discovered: list[int] = []

        if su is None:
            # nothing to the right: a fresh final strong connector s0
            if st != first or mode != "D":
                raise InvariantError("missing closing connector")
            s0 = self._connector(True, ("s", 0))
            self.next_strong[first] = s0
            for b in targets:
                self._link_bc(b, s0)
            closer = s0
        else:
            outside = any(self._out_b_count(c) > inq[c] for c in qconn) or any(
                self.next[b] >= 0 and self.next[b] != su for b in targets)
            if not outside:
                for b in targets:
                    if self.next[b] < 0:
                        self._link_bc(b, su)
                c = self.next_strong.get(first)
                while c is not None and c != su:
                    self._demote(c)
                    c = self.next_strong.pop(c)
                self.next_strong[first] = su
                closer = su
            else:
                closer = st
                copy = self._connector(st == first, ("s", self.label[st][1]))
                for x in list(self.ins[st]):
                    self._unlink_in(x, st)
                    self._link_in(x, copy)
                for b in members:
                    if self.prev[b] == st:
                        self._move_out(st, b, copy)
                for c in qconn:
                    if c != st and self._out_b_count(c) > inq[c]:
                        for x in list(self.out_int[c]) + list(self.out_frac[c]):
                            self.work += 1
                            if x not in member_set:
                                self._move_out(c, x, st)
                                discovered.append(x)
                for b in targets:
                    c = self.next[b]
                    if c >= 0:
                        self._unlink_bc(b, c)
                        if c != su:
                            if self.ins[c]:
                                self.kept_shared += 1
                            else:
                                for x in list(self.out_int[c]) + list(self.out_frac[c]):
                                    self._move_out(c, x, st)
                                    discovered.append(x)
                                self.alive[c] = False
                    self._link_bc(b, st)
                if st == first:
                    self.next_strong[copy] = st
                    self.first = first = copy
                else:
                    self._demote(copy)
                    c = self.next_strong.get(first)
                    while c is not None and c != st:
                        self._demote(c)
                        c = self.next_strong.pop(c)
                    self.next_strong[first] = st
        if mode == "D":
            self.label[first] = ("s", i2)
        else:
            self.label[first] = ("a", i2)
            self.a_node[i2] = first
            self.next_strong.pop(first, None)
            for b in members:
                self.settled[self.bidx[b]] = True
            self.first = closer
        return discovered

    def _demote(self, c: int):
        self.strong[c] = False
        self.label[c] = ("s'", self.label[c][1])

    # -- one step ----------------------------------------------------------
    def step_process(self, i2: int) -> NotAStickCertificate | None:
        if self.frozen:
            raise RuntimeError("dag is frozen")
        inst = self.inst
        i_txt = fmt_half(i2)
        f_members: list[int] = []
        if i2 % 2 == 0:
            i = i2 // 2
            nbrs = inst.N_a(i)
            self.work += 1 + len(nbrs)
            old = [self.bnode[j] for j in nbrs if self.bnode[j] >= 0]
            member_set = set(old)
            qconn = {self.first}
            inq: Counter = Counter()
            for b in old:
                p = self.prev[b]
                inq[p] += 1
                if p in qconn:
                    continue
                qconn.add(p)
                for x in self.ins[p]:
                    self.work += 1
                    if x not in member_set:
                        if not self.is_b(x):
                            raise InvariantError("connector in-neighbor inside the working zone")
                        return NotAStickCertificate(i, self.bidx[x], self.bidx[b])
            members = list(old)
            for j in nbrs:
                if self.bnode[j] < 0:
                    b = self._new_b(j)
                    self._link_cb(self.first, b)
                    inq[self.first] += 1
                    members.append(b)
            if self.tracing:
                self._trace(f"3.{i_txt}.3", "D'", set(members) | qconn)
            if members:
                self._update_members(members, qconn)
                discovered = self._close(members, qconn, inq, "D", i2)
                if discovered:
                    g = _above(max(self.last[self.bidx[b]] for b in members))
                    for x in discovered:
                        if self.last[self.bidx[x]] < g:
                            self._set_last(x, g)
                if self.tracing:
                    self._trace(f"3.{i_txt}.5", "D", None)
            for b in members:
                if self.last[self.bidx[b]] == i2:
                    if self.prev[b] != self.first:
                        raise InvariantError("b with Last = i has a predecessor")
                    f_members.append(b)
            f_qconn = {self.first}
            f_inq = Counter({self.first: len(f_members)})
        else:
            f_members, f_qconn, f_inq = self._collect_half(i2)
        if self.tracing:
            self._trace(f"3.{i_txt}.6", "F'", set(f_members) | f_qconn)
        if f_members:
            self._close(f_members, f_qconn, f_inq, "F", i2)
        else:
            c = self._connector(True, ("a", i2))
            for x in list(self.ins[self.first]):
                self._unlink_in(x, self.first)
                self._link_in(x, c)
            self._link_cc(c, self.first)
            self.a_node[i2] = c
        if self.tracing:
            self._trace(f"3.{i_txt}.7", "D", None)
        self.step = i2
        if self.debug:
            self.check_invariants()
        return None

    def _update_members(self, members: list[int], qconn: set):
        """Update 1: refresh Last over D' in topological order."""
        children: dict[int, list[int]] = {}
        for b in members:
            children.setdefault(self.prev[b], []).append(b)
        ymax = {self.first: -1}
        seen: Counter = Counter()
        ready = deque([self.first])
        while ready:
            c = ready.popleft()
            y = ymax[c]
            for b in children.get(c, ()):
                self.work += 1
                j = self.bidx[b]
                g = _above(y)
                if g > self.last[j]:
                    self._set_last(b, g)
                c2 = self.next[b]
                if c2 >= 0 and c2 in qconn:
                    seen[c2] += 1
                    ymax[c2] = max(ymax.get(c2, -1), self.last[j])
                    if seen[c2] == len(self.ins[c2]):
                        ready.append(c2)

    def needs_half_step(self) -> bool:
        return bool(self.out_frac[self.first])

    def _collect_half(self, i2: int):
        """Stopping traversal from first over fractional sublists (update 2)."""
        members: list[int] = []
        qconn = {self.first}
        inq: Counter = Counter()
        visited: Counter = Counter()
        stack = list(self.out_frac[self.first])
        while stack:
            b = stack.pop()
            self.work += 1
            j = self.bidx[b]
            if self.last[j] > i2:
                raise InvariantError(f"b{j} on a fractional sublist above the step")
            self._set_last(b, i2)
            members.append(b)
            p = self.prev[b]
            inq[p] += 1
            qconn.add(p)
            c = self.next[b]
            visited[c] += 1
            if visited[c] == len(self.ins[c]):
                stack.extend(self.out_frac[c])
        return members, qconn, inq

    # -- inspection --------------------------------------------------------
    def node_name(self, v: int) -> str:
        if self.is_b(v):
            return f"b{self.bidx[v]}({fmt_half(self.last[self.bidx[v]])})"
        kind, d = self.label[v]
        if kind == "s'":
            name = f"s'{fmt_half(d)}"
        else:
            name = f"{kind}{fmt_half(d)}"
            name = name.upper() if self.strong[v] else name
        return name + ("*" if v == self.first else "")

    def _out_all(self, v: int):
        if self.is_b(v):
            return [self.next[v]] if self.next[v] >= 0 else []
        return self._outs(v)

    def render(self, nodes: set | None = None) -> str:
        """Arrow-separated layers by longest path; parallel nodes in braces."""
        if nodes is None:
            nodes = {v for v in range(len(self.bidx)) if self.alive[v]}
        indeg = {v: 0 for v in nodes}
        for v in nodes:
            for w in self._out_all(v):
                if w in nodes:
                    indeg[w] += 1
        depth = {v: 0 for v in nodes if indeg[v] == 0}
        order = sorted(depth)
        k = 0
        while k < len(order):
            v = order[k]
            k += 1
            for w in self._out_all(v):
                if w in nodes:
                    depth[w] = max(depth.get(w, 0), depth[v] + 1)
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        order.append(w)
        layers: dict[int, list[int]] = {}
        for v, dv in depth.items():
            layers.setdefault(dv, []).append(v)
        parts = []
        for dv in sorted(layers):
            names = [self.node_name(v) for v in sorted(layers[dv])]
            parts.append(names[0] if len(names) == 1 else "{" + ", ".join(names) + "}")
        return " -> ".join(parts)

    def _trace(self, step: str, what: str, nodes):
        self.trace.append(TraceRow(step, what, self.render(nodes)))

    def node_of(self, o: Origin) -> int:
        kind, x = o
        if kind == "a":
            return self.a_node[2 * x]
        return self.bnode[x]

    def reachable_from(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in self._out_all(x):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        seen.discard(v)
        return seen

    # -- invariants --------------------------------------------------------
    def check_invariants(self):
        inst = self.inst
        i2 = self.step
        fl = i2 // 2
        alive = [v for v in range(len(self.bidx)) if self.alive[v]]
        # I.1: B nodes are exactly the neighbors of a_1..a_floor(i)
        want = set()
        for t in range(1, fl + 1):
            want.update(inst.N_a(t))
        have = {self.bidx[v] for v in alive if self.is_b(v)}
        if have != want:
            raise InvariantError(f"I.1: B nodes {sorted(have)} != {sorted(want)}")
        a_int = sorted(d for d in self.a_node if d % 2 == 0)
        if a_int != [2 * t for t in range(1, fl + 1)]:
            raise InvariantError("I.1: integer a-connectors missing")
        # I.4: one in-arc and one out-arc per B node, consistent both ways
        for v in alive:
            if self.is_b(v):
                p, n = self.prev[v], self.next[v]
                if p < 0 or n < 0 or not self.alive[p] or not self.alive[n]:
                    raise InvariantError(f"I.4: b{self.bidx[v]} lacks prev or next")
                sub = self.out_frac if self.last[self.bidx[v]] & 1 else self.out_int
                if v not in sub[p] or v not in self.ins[n]:
                    raise InvariantError(f"I.4: arcs of b{self.bidx[v]} inconsistent")
            else:
                for b in list(self.out_int[v]) + list(self.out_frac[v]):
                    if self.prev[b] != v:
                        raise InvariantError("I.4: stale connector out-arc")
        # I.2: working zone is a chain of main bubbles first -> ... -> s0
        chain = [self.first]
        while chain[-1] in self.next_strong:
            chain.append(self.next_strong[chain[-1]])
            if len(chain) > len(alive):
                raise InvariantError("I.2: strong chain loops")
        end = chain[-1]
        if self.label[end] != ("s", 0) or self._outs(end):
            raise InvariantError("I.2: chain does not end at s0")
        for c in chain:
            if not self.strong[c]:
                raise InvariantError("I.2: simple connector in the strong chain")
        idx = [self.label[c][1] for c in chain]
        if any(self.label[c][0] != "s" for c in chain) or idx != sorted(idx, reverse=True) or len(set(idx)) != len(idx):
            raise InvariantError(f"I.2a: main bubbles out of order {idx}")
        if idx[0] > i2:
            raise InvariantError("I.2: first labeled beyond the current step")
        working = set()
        for s, s_next in zip(chain, chain[1:]):
            bubble = self._bubble(s, s_next)
            t = self.label[s][1] // 2
            for v in bubble:
                if v in working:
                    raise InvariantError("I.2: node in two main bubbles")
                working.add(v)
                if self.is_b(v):
                    j = self.bidx[v]
                    if self.settled[j]:
                        raise InvariantError("I.2: settled node in the working zone")
                    nb = inst.N_b(j)
                    if t not in nb or any(t < y <= fl for y in nb):
                        raise InvariantError(f"I.2d: b{j} misplaced in X_{t}")
                    if self.last[j] <= i2:
                        raise InvariantError(f"I.2d: b{j} should be settled")
                else:
                    if self.strong[v]:
                        raise InvariantError("I.2: strong connector inside a main bubble")
                    if self.out_c[v]:
                        raise InvariantError("I.3: connector arc in the working zone")
        # I.2c: settled zone, a chain of small bubbles a_x -> ... -> first
        srcs = [v for v in alive if not self.ins[v]] if False else [v for v in alive if not self.is_b(v) and not self.ins[v]]
        if i2 >= 2:
            a1 = self.a_node[2]
            if srcs != [a1]:
                raise InvariantError("I.2c: source is not a1")
            a_chain = sorted(self.a_node)
            for d, d_next in zip(a_chain, a_chain[1:] + [None]):
                s = self.a_node[d]
                s_next = self.a_node[d_next] if d_next is not None else self.first
                if not self.strong[s]:
                    raise InvariantError("I.2c: a-connector not strong")
                for v in self._bubble(s, s_next):
                    if self.is_b(v):
                        if not self.settled[self.bidx[v]]:
                            raise InvariantError("I.2c: unsettled node in the settled zone")
                    elif self.out_c[v] or self.strong[v]:
                        raise InvariantError("I.3: connector inside a small bubble")
                if s_next in self.out_c[s] and self._outs(s) != [s_next]:
                    raise InvariantError("I.2c: trivial bubble with extra arcs")
        for v in alive:
            if self.is_b(v) and self.settled[self.bidx[v]] and v in working:
                raise InvariantError("settled node in working zone")
            if self.is_b(v) and not self.settled[self.bidx[v]] and v not in working:
                raise InvariantError(f"I.2: b{self.bidx[v]} outside every main bubble")

    def _bubble(self, s: int, t: int) -> set[int]:
        """Interior of the bubble opened by s and closed by t; checks its shape."""
        inside = set()
        stack = [s]
        while stack:
            x = stack.pop()
            outs = self._out_all(x)
            if not outs and x != t:
                raise InvariantError("I.2: dead end inside a bubble")
            for w in outs:
                if w != t and w not in inside:
                    inside.add(w)
                    stack.append(w)
        for v in inside:
            if self.is_b(v):
                preds = [self.prev[v]]
            else:
                preds = list(self.ins[v])
            if any(p != s and p not in inside for p in preds):
                raise InvariantError("I.2: bubble entered from outside")
            if not self.is_b(v) and any(self.is_b(p) == self.is_b(v) for p in preds):
                raise InvariantError("I.3: paths do not alternate")
            if self.is_b(v) and self.is_b(self.prev[v]):
                raise InvariantError("I.3: paths do not alternate")
        return inside


@dataclass
class CanonicalResult:
    dag: WorkDag
    order: GroundOrder


@dataclass
class Rejection:
    dag: WorkDag
    certificate: NotAStickCertificate


def step_process(dag: WorkDag, inst: Instance, i2: int) -> NotAStickCertificate | None:
    if dag.inst is not inst:
        raise ValueError("dag was built for another instance")
    return dag.step_process(i2)


def run_cso(inst: Instance, debug: bool = False, trace: bool = False) -> CanonicalResult | Rejection:
    dag = WorkDag(inst, debug=debug, trace=trace)
    for i in range(1, inst.n_a + 1):
        cert = dag.step_process(2 * i)
        if cert is not None:
            return Rejection(dag, cert)
        if dag.needs_half_step():
            dag.step_process(2 * i + 1)
    if any(not dag.settled[j] for j in range(1, inst.n_b + 1)):
        raise InvariantError("unsettled B-origins after the last step")
    dag.frozen = True
    return CanonicalResult(dag, extract_order(dag))


def extract_order(dag: WorkDag) -> GroundOrder:
    """Linear extension of D; connectors first, then lowest B index."""
    import heapq

    nodes = [v for v in range(len(dag.bidx)) if dag.alive[v]]
    indeg = {v: 0 for v in nodes}
    for v in nodes:
        for w in dag._out_all(v):
            indeg[w] += 1
    a_label = {c: d // 2 for d, c in dag.a_node.items() if d % 2 == 0}

    def key(v):
        return (1, dag.bidx[v], v) if dag.is_b(v) else (0, 0, v)

    heap = [key(v) for v in nodes if indeg[v] == 0]
    heapq.heapify(heap)
    items: list[Origin] = []
    while heap:
        _, _, v = heapq.heappop(heap)
        if dag.is_b(v):
            items.append(("b", dag.bidx[v]))
        elif v in a_label:
            items.append(("a", a_label[v]))
        for w in dag._out_all(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, key(w))
    return GroundOrder(tuple(items))


def dag_precedes(dag: WorkDag, x: Origin, y: Origin) -> bool:
    if x == y:
        return False
    return dag.node_of(y) in dag.reachable_from(dag.node_of(x))


def precedence_table(dag: WorkDag) -> dict[Origin, set[Origin]]:
    """All origins reachable from each origin in the final DAG."""
    names = {dag.bnode[j]: ("b", j) for j in range(1, dag.inst.n_b + 1)}
    names.update({c: ("a", d // 2) for d, c in dag.a_node.items() if d % 2 == 0})
    return {o: {names[w] for w in dag.reachable_from(v) if w in names} for v, o in names.items()}


def replay_certificate(inst: Instance, cert: NotAStickCertificate, dag: WorkDag) -> bool:
    """Check a rejection against the DAG it was found in."""
    i, x, y = cert.i, cert.b_x, cert.b_y
    if not inst.has_edge(i, y) or inst.has_edge(i, x):
        return False
    if inst.N_b(x)[0] >= i:
        return False
    return dag.bnode[y] in dag.reachable_from(dag.bnode[x])


def is_canonical_order(inst: Instance, order: GroundOrder, rel: ForcedRelation | None = None) -> bool:
    """True iff ``order`` extends the forced pairs and places each b_j right after a_{m_j}."""
    order.validate(inst)
    if rel is None:
        rel = forcing_closure(inst, keep_log=False)
    if isinstance(rel, CycleCertificate):
        return False
    if not rel.extended_by(order):
        return False
    pos = order.positions()
    for j in range(1, inst.n_b + 1):
        pb = pos[("b", j)]
        mj = rel.m[j]
        if not pos[("a", mj)] < pb:
            return False
        if mj < inst.n_a and not pb < pos[("a", mj + 1)]:
            return False
    return True
