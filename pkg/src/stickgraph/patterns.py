"""Forbidden ordered submatrices P1, P2, P3 of an ordered adjacency matrix.

Templates (rows top to bottom, ``*`` unconstrained)::

    P1   p q r      P2   p q      P3   p q r
    i    * 1 *      i    1 *      i    * 1 *
    j    * 0 1      j    0 1      j    1 0 1
    k    1 * *      k    1 *

A pair (A order, B order) admits a Stick representation exactly when the
ordered matrix contains none of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .model import Instance, ordered_matrix

# (row, col) offsets into the witness rows/cols and the required value.
TEMPLATES = {
    "P1": ((0, 1, 1), (1, 1, 0), (1, 2, 1), (2, 0, 1)),
    "P2": ((0, 0, 1), (1, 0, 0), (1, 1, 1), (2, 0, 1)),
    "P3": ((0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 2, 1)),
}
SHAPES = {"P1": (3, 3), "P2": (3, 2), "P3": (2, 3)}


@dataclass(frozen=True)
class PatternWitness:
    kind: str
    rows: tuple[int, ...]  # 1-based A indices
    cols: tuple[int, ...]  # 1-based positions in the B order

    def matches(self, M) -> bool:
        nr, nc = SHAPES[self.kind]
        if len(self.rows) != nr or len(self.cols) != nc:
            return False
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(set(self.cols)):
            return False
        return all(M[self.rows[r] - 1][self.cols[c] - 1] == v for r, c, v in TEMPLATES[self.kind])

    def render(self, b_order) -> str:
        rows = ",".join(f"a{i}" for i in self.rows)
        cols = ",".join(f"b{b_order[q - 1]}" for q in self.cols)
        return f"PATTERN {self.kind} rows={rows} cols={cols}"


def find_forbidden(M) -> PatternWitness | None:
    """Return a witness of P1, P2 or P3 in ``M`` or None; O(rows * cols)."""
    n = len(M)
    m = len(M[0]) if n else 0
    if not n or not m:
        return None
    first_c = [-1] * n  # leftmost 1 in each row
    last_c = [-1] * n
    for j, row in enumerate(M):
        for q, v in enumerate(row):
            if v:
                if first_c[j] < 0:
                    first_c[j] = q
                last_c[j] = q
    first_r = [-1] * m  # topmost 1 in each column
    last_r = [-1] * m
    for q in range(m):
        for j in range(n):
            if M[j][q]:
                if first_r[q] < 0:
                    first_r[q] = j
                last_r[q] = j

    # P2: a zero strictly inside the span of column p, on a row with a 1 right of p.
    for p in range(m):
        top, bot = first_r[p], last_r[p]
        for j in range(top + 1, bot):
            if not M[j][p] and last_c[j] > p:
                k = next(x for x in range(j + 1, bot + 1) if M[x][p])
                return PatternWitness("P2", (top + 1, j + 1, k + 1), (p + 1, last_c[j] + 1))

    # P3: a zero strictly inside the span of row j, under a 1 of the same column.
    for j in range(n):
        for q in range(first_c[j] + 1, last_c[j]):
            if not M[j][q] and 0 <= first_r[q] < j:
                return PatternWitness("P3", (first_r[q] + 1, j + 1), (first_c[j] + 1, q + 1, last_c[j] + 1))

    # P1: below_left[j][q] = some 1 in rows > j and columns < q.
    below_left = [[False] * (m + 1) for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        row, nxt, cur = M[j], below_left[j + 1], below_left[j]
        seen = False
        for q in range(m):
            seen = seen or bool(row[q])
            # cur[q + 1]: a 1 in rows >= j, columns <= q
            cur[q + 1] = nxt[q + 1] or seen
    for j in range(n):
        for q in range(1, m):
            if M[j][q] or not (0 <= first_r[q] < j) or last_c[j] <= q:
                continue
            if below_left[j + 1][q]:
                for k in range(j + 1, n):
                    p = first_c[k]
                    if 0 <= p < q:
                        return PatternWitness("P1", (first_r[q] + 1, j + 1, k + 1), (p + 1, q + 1, last_c[j] + 1))
    return None


def find_forbidden_naive(M) -> PatternWitness | None:
    """Template enumeration over all row and column subsets; test oracle only."""
    n = len(M)
    m = len(M[0]) if n else 0
    for kind in ("P1", "P2", "P3"):
        nr, nc = SHAPES[kind]
        for rows in combinations(range(1, n + 1), nr):
            for cols in combinations(range(1, m + 1), nc):
                w = PatternWitness(kind, rows, cols)
                if w.matches(M):
                    return w
    return None


def check_ab_order(inst: Instance, b_order) -> PatternWitness | None:
    """None when (A order, b_order) admits a Stick representation, else a witness."""
    return find_forbidden(ordered_matrix(inst, b_order))
