"""Instances, ground orders and ordered adjacency matrices.

A-origins and B-origins are referred to by 1-based indices.  An origin in a
ground order is the tuple ``("a", i)`` or ``("b", j)``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

log = logging.getLogger(__name__)

Origin = tuple[str, int]


class InstanceError(ValueError):
    """Malformed instance text or inconsistent instance data."""


class OrderError(ValueError):
    """A ground order or B order that does not fit its instance."""


@dataclass(frozen=True)
class BProfile:
    one: int  # smallest neighbor index
    k: int  # largest neighbor index


@dataclass(frozen=True)
class Instance:
    n_a: int
    n_b: int
    nbrs_b: tuple[tuple[int, ...], ...]  # nbrs_b[j - 1] = sorted A-indices of b_j
    nbrs_a: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise InstanceError("negative vertex count")
        if len(self.nbrs_b) != self.n_b:
            raise InstanceError("adjacency list count does not match n_b")
        rev: list[list[int]] = [[] for _ in range(self.n_a)]
        for j, nb in enumerate(self.nbrs_b, start=1):
            if not nb:
                raise InstanceError(f"isolated B vertex b{j}")
            if list(nb) != sorted(set(nb)):
                raise InstanceError(f"neighbors of b{j} not sorted and distinct")
            if nb[0] < 1 or nb[-1] > self.n_a:
                raise InstanceError(f"neighbor index of b{j} out of range")
            for i in nb:
                rev[i - 1].append(j)
        object.__setattr__(self, "nbrs_a", tuple(tuple(r) for r in rev))

    @classmethod
    def from_neighborhoods(cls, n_a: int, nbrs: list, notes=()) -> "Instance":
        return cls(n_a, len(nbrs), tuple(tuple(sorted(set(nb))) for nb in nbrs), notes=tuple(notes))

    @property
    def n_edges(self) -> int:
        return sum(len(nb) for nb in self.nbrs_b)

    def N_b(self, j: int) -> tuple[int, ...]:
        return self.nbrs_b[j - 1]

    def N_a(self, i: int) -> tuple[int, ...]:
        return self.nbrs_a[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        nb = self.nbrs_b[j - 1]
        return nb[0] <= i <= nb[-1] and i in nb

    def edges(self) -> list[tuple[int, int]]:
        return sorted((i, j) for j, nb in enumerate(self.nbrs_b, 1) for i in nb)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for j, nb in enumerate(self.nbrs_b, 1) for i in nb}


def parse_instance(text: str, strip_isolated: bool = False) -> Instance:
    """Parse ``p astick <n_a> <n_b>`` followed by ``e <a> <b>`` lines.

    Duplicate edges are dropped with a warning.  Isolated B vertices are an
    error unless ``strip_isolated`` is set, in which case they are removed,
    the remaining B vertices are renumbered and the removal is recorded in
    ``Instance.notes``.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise InstanceError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "astick":
                raise InstanceError(f"line {lineno}: expected 'p astick <n_a> <n_b>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise InstanceError(f"line {lineno}: non-integer vertex count") from None
            if header[0] < 0 or header[1] < 0:
                raise InstanceError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if header is None:
                raise InstanceError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise InstanceError(f"line {lineno}: expected 'e <a> <b>'")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise InstanceError(f"line {lineno}: non-integer index") from None
            if not (1 <= i <= header[0]) or not (1 <= j <= header[1]):
                raise InstanceError(f"line {lineno}: index out of range")
            if (i, j) in seen:
                log.warning("line %d: duplicate edge a%d b%d ignored", lineno, i, j)
                continue
            seen.add((i, j))
            edges.append((i, j))
        else:
            raise InstanceError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise InstanceError("missing header line")
    n_a, n_b = header
    nbrs: list[list[int]] = [[] for _ in range(n_b)]
    for i, j in edges:
        nbrs[j - 1].append(i)
    isolated = [j for j in range(1, n_b + 1) if not nbrs[j - 1]]
    notes: list[str] = []
    if isolated:
        if not strip_isolated:
            raise InstanceError(f"isolated B vertex b{isolated[0]}")
        notes.append("removed isolated " + ",".join(f"b{j}" for j in isolated))
        nbrs = [nb for nb in nbrs if nb]
    return Instance.from_neighborhoods(n_a, nbrs, notes)


def serialize_instance(inst: Instance) -> str:
    lines = [f"p astick {inst.n_a} {inst.n_b}"]
    lines += [f"e {i} {j}" for i, j in inst.edges()]
    return "\n".join(lines) + "\n"


def b_profiles(inst: Instance) -> list[BProfile]:
    return [BProfile(nb[0], nb[-1]) for nb in inst.nbrs_b]


_TOKEN = re.compile(r"^([ab])(\d+)$")


@dataclass(frozen=True)
class GroundOrder:
    """Left-to-right order of all origins on the ground line."""

    items: tuple[Origin, ...]

    @classmethod
    def parse(cls, text: str) -> "GroundOrder":
        items = []
        for tok in text.replace(",", " ").split():
            m = _TOKEN.match(tok)
            if not m:
                raise OrderError(f"bad origin token {tok!r}")
            items.append((m.group(1), int(m.group(2))))
        return cls(tuple(items))

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __str__(self):
        return " ".join(f"{k}{x}" for k, x in self.items)

    def b_order(self) -> list[int]:
        return [x for k, x in self.items if k == "b"]

    def positions(self) -> dict[Origin, int]:
        return {o: p for p, o in enumerate(self.items, start=1)}

    def validate(self, inst: Instance) -> None:
        want = {("a", i) for i in range(1, inst.n_a + 1)} | {("b", j) for j in range(1, inst.n_b + 1)}
        if len(self.items) != len(want) or set(self.items) != want:
            raise OrderError("order is not a permutation of the origins")
        a_seq = [x for k, x in self.items if k == "a"]
        if a_seq != sorted(a_seq):
            raise OrderError("A-origins out of index order")


def interleave(n_a: int, b_order, slots) -> GroundOrder:
    """Ground order placing ``b_order[q]`` right after ``a_{slots[q]}``.

    ``slots`` must be non-decreasing; slot 0 means before ``a_1``.
    """
    items: list[Origin] = []
    q = 0
    for i in range(0, n_a + 1):
        if i:
            items.append(("a", i))
        while q < len(b_order) and slots[q] == i:
            items.append(("b", b_order[q]))
            q += 1
    if q != len(b_order):
        raise OrderError("slots must be non-decreasing and within 0..n_a")
    return GroundOrder(tuple(items))


def check_b_order(inst: Instance, b_order) -> list[int]:
    b_order = list(b_order)
    if sorted(b_order) != list(range(1, inst.n_b + 1)):
        raise OrderError("b_order is not a permutation of 1..n_b")
    return b_order


def ordered_matrix(inst: Instance, b_order) -> list[list[int]]:
    """Rows a_1..a_{n_a}; column q is b_order[q]."""
    b_order = check_b_order(inst, b_order)
    M = [[0] * len(b_order) for _ in range(inst.n_a)]
    for q, j in enumerate(b_order):
        for i in inst.N_b(j):
            M[i - 1][q] = 1
    return M


# Fixtures used throughout the tests and examples.

def fixture(name: str) -> Instance:
    table = {
        "G1": (5, [[4, 5], [2, 3, 4], [1, 3], [1, 2]]),
        "G2": (4, [[1, 3], [2, 4]]),
        "G3": (6, [[5], [1, 2, 3, 4, 5, 6]]),
        "G5": (3, [[1, 2], [2, 3]]),
        "single": (1, [[1]]),
    }
    n_a, nbrs = table[name]
    return Instance.from_neighborhoods(n_a, nbrs)
