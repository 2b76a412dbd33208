"""Instance generators and the scaling benchmark."""

from __future__ import annotations

import gc
import math
import random
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .closure import forcing_closure
from .cso import CanonicalResult, run_cso
from .model import Instance

MAX_REDRAWS = 1000


def gen_stick_instance(n_a: int, n_b: int, seed: int, max_len: int | None = None) -> Instance:
    """Yes-instance read off a random steady layout.

    Origins are interleaved at random with A in index order; every segment
    length is uniform in [1, max_len] (default n_a + n_b).  An isolated B gets
    its length redrawn; if no A-segment can reach it at all, the whole layout
    is redrawn.
    """
    if n_a < 1 or n_b < 1:
        raise ValueError("n_a and n_b must be positive")
    rng = np.random.default_rng(seed)
    n = n_a + n_b
    top = max_len or n
    for _ in range(MAX_REDRAWS):
        is_b = np.zeros(n, dtype=bool)
        is_b[rng.choice(n, size=n_b, replace=False)] = True
        pos = np.arange(1, n + 1)
        pa, pb = pos[~is_b], pos[is_b]
        a_len = rng.integers(1, top + 1, size=n_a)
        b_len = rng.integers(1, top + 1, size=n_b)
        d = pb[None, :] - pa[:, None]  # rows A, cols B
        reach = (d > 0) & (d <= a_len[:, None])
        adj = reach & (d <= b_len[None, :])
        iso = np.flatnonzero(~adj.any(axis=0))
        ok = True
        for j in iso:
            if not reach[:, j].any():
                ok = False
                break
            while not adj[:, j].any():
                b_len[j] = rng.integers(1, top + 1)
                adj[:, j] = reach[:, j] & (d[:, j] <= b_len[j])
        if ok:
            nbrs = [tuple(int(i) + 1 for i in np.flatnonzero(adj[:, j])) for j in range(n_b)]
            return Instance.from_neighborhoods(n_a, nbrs, notes=(f"stick seed={seed}",))
    raise ValueError(f"no layout with max_len={top} reaches all {n_b} B-origins; use longer segments")


def gen_random_bipartite(n_a: int, n_b: int, p: float, seed: int) -> Instance:
    if not 0 < p <= 1:
        raise ValueError("p must be in (0, 1]")
    rng = random.Random(seed)
    nbrs = []
    for _ in range(n_b):
        nb = [i for i in range(1, n_a + 1) if rng.random() < p]
        nbrs.append(nb or [rng.randint(1, n_a)])
    return Instance.from_neighborhoods(n_a, nbrs, notes=(f"random p={p} seed={seed}",))


def stick_instance_with_edges(target: int, seed: int) -> Instance:
    """Balanced stick instance whose edge count is close to ``target``."""
    n = max(1, int(math.sqrt(target * 6)))
    inst = gen_stick_instance(n, n, seed)
    for _ in range(6):
        e = inst.n_edges
        if abs(e - target) <= 0.03 * target:
            break
        n = max(1, round(n * math.sqrt(target / max(e, 1))))
        inst = gen_stick_instance(n, n, seed)
    return inst


@dataclass
class BenchRow:
    n_a: int
    n_b: int
    edges: int
    cso_ms: float
    closure_ms: float | None  # None when skipped
    accepted: bool


@dataclass
class BenchReport:
    rows: list[BenchRow]
    ratios: list[float]  # cso time of each row over the previous one
    dropped: list[int] = field(default_factory=list)  # sizes below timer resolution

    def to_csv(self) -> str:
        lines = ["n_a,n_b,edges,cso_ms,closure_ms,accepted"]
        for r in self.rows:
            cl = "" if r.closure_ms is None else f"{r.closure_ms:.3f}"
            lines.append(f"{r.n_a},{r.n_b},{r.edges},{r.cso_ms:.3f},{cl},{int(r.accepted)}")
        return "\n".join(lines) + "\n"


def _interleaved_medians_ms(fns, reps: int) -> list[float]:
    """Median wall time of each callable, with repetitions taken round-robin.

    Round-robin spreads slow drift of the machine evenly over all sizes.
    """
    for fn in fns:
        fn()  # warmup
    times = [[] for _ in fns]
    enabled = gc.isenabled()
    gc.disable()  # as timeit does
    try:
        for _ in range(reps):
            for k, fn in enumerate(fns):
                t0 = time.perf_counter()
                fn()
                times[k].append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return [statistics.median(t) * 1000 for t in times]


def bench_scaling(sizes, reps: int = 5, seed: int = 0, closure_max_edges: int | None = 20_000) -> BenchReport:
    """Median CSO and closure times on stick instances with ``sizes`` edges each.

    Closure is timed only up to ``closure_max_edges`` (None: always) since it
    is quadratic and only there for comparison.
    """
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    resolution = time.get_clock_info("perf_counter").resolution
    insts = [stick_instance_with_edges(int(t), seed + k) for k, t in enumerate(sizes)]
    cso = _interleaved_medians_ms([lambda i=i: run_cso(i) for i in insts], reps)
    closable = [i for i in insts if closure_max_edges is None or i.n_edges <= closure_max_edges]
    cl = dict(zip(map(id, closable),
                  _interleaved_medians_ms([lambda i=i: forcing_closure(i, keep_log=False) for i in closable], reps)))
    rows, dropped = [], []
    for target, inst, cso_ms in zip(sizes, insts, cso):
        if cso_ms / 1000 < 10 * resolution:
            dropped.append(int(target))
            continue
        accepted = isinstance(run_cso(inst), CanonicalResult)
        rows.append(BenchRow(inst.n_a, inst.n_b, inst.n_edges, cso_ms, cl.get(id(inst)), accepted))
    ratios = [b.cso_ms / a.cso_ms for a, b in zip(rows, rows[1:])]
    return BenchReport(rows, ratios, dropped)


def noverlap_corpus(count: int, seed: int = 0, max_b: int = 7) -> list[Instance]:
    """Stick instances whose B-neighborhoods pairwise strictly overlap.

    Short segments (length at most 2 or 3) make such instances common enough
    to sample with 3 to ``max_b`` B-origins.
    """
    from .minlen import is_n_overlap

    out = []
    s = seed
    spread = max(1, max_b - 2)
    while len(out) < count:
        k = s - seed
        nb = 3 + k % spread
        inst = gen_stick_instance(nb + k % 4, nb, s, max_len=2 + k % 2)
        if is_n_overlap(inst):
            out.append(inst)
        s += 1
    return out
