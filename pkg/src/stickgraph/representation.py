"""Steady, shortest Stick representations built from ground orders.

Origin number p sits at (p, -p).  A-segments run right, B-segments run up.
Consecutive origins are one unit apart and every tip lies on the farthest
segment it has to meet, so the whole layout is fixed by the ground order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import GroundOrder, Instance, Origin

SCALE = 20


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class StickRepresentation:
    order: GroundOrder
    pos: dict  # Origin -> 1-based ground position
    a_len: tuple[int, ...]  # a_len[i - 1]
    b_len: tuple[int, ...]  # b_len[j - 1]


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    kind: str  # "crossing": non-edge segments meet; "missing": edge segments do not

    def render(self) -> str:
        if self.kind == "crossing":
            return f"A-segment of a{self.i} crosses B-segment of b{self.j} (non-edge)"
        return f"A-segment of a{self.i} misses B-segment of b{self.j} (edge)"


def build_representation(inst: Instance, order: GroundOrder) -> StickRepresentation:
    order.validate(inst)
    pos = order.positions()
    b_len = []
    for j, nb in enumerate(inst.nbrs_b, start=1):
        pb = pos[("b", j)]
        if pos[("a", nb[-1])] > pb:
            raise RepresentationError(f"b{j} precedes its neighbor a{nb[-1]}")
        b_len.append(pb - pos[("a", nb[0])])
    a_len = []
    for i, nb in enumerate(inst.nbrs_a, start=1):
        # an isolated A-origin gets a degenerate segment so that it meets nothing
        a_len.append(max(pos[("b", j)] for j in nb) - pos[("a", i)] if nb else 0)
    return StickRepresentation(order, pos, tuple(a_len), tuple(b_len))


def segments_meet(rep: StickRepresentation, i: int, j: int) -> bool:
    pa = rep.pos[("a", i)]
    pb = rep.pos[("b", j)]
    return pa < pb <= pa + rep.a_len[i - 1] and pb - pa <= rep.b_len[j - 1]


def verify_representation(inst: Instance, rep: StickRepresentation) -> Violation | None:
    """First pair (i, j) in lexicographic order whose intersection disagrees with E."""
    for i in range(1, inst.n_a + 1):
        nb = set(inst.N_a(i))
        for j in range(1, inst.n_b + 1):
            meet = segments_meet(rep, i, j)
            if meet != (j in nb):
                return Violation(i, j, "crossing" if meet else "missing")
    return None


def total_length(rep: StickRepresentation) -> int:
    return sum(rep.a_len) + sum(rep.b_len)


def order_length(inst: Instance, order: GroundOrder) -> int:
    return total_length(build_representation(inst, order))


def render_svg(rep: StickRepresentation) -> str:
    n = len(rep.order)
    lo, hi = -SCALE, (n + 1) * SCALE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{lo} {lo} {hi - lo} {hi - lo}" '
        f'width="{hi - lo}" height="{hi - lo}">',
        f'<line class="ground" x1="0" y1="0" x2="{hi}" y2="{hi}" stroke="#999" stroke-dasharray="4 3"/>',
    ]
    for o in rep.order:
        kind, x = o
        p = rep.pos[o]
        cx = cy = p * SCALE
        if kind == "a":
            length = rep.a_len[x - 1] * SCALE
            out.append(f'<line class="a" x1="{cx}" y1="{cy}" x2="{cx + length}" y2="{cy}" stroke="#1f77b4" stroke-width="2"/>')
        else:
            length = rep.b_len[x - 1] * SCALE
            out.append(f'<line class="b" x1="{cx}" y1="{cy}" x2="{cx}" y2="{cy - length}" stroke="#d62728" stroke-width="2"/>')
        out.append(f'<text x="{cx - 4}" y="{cy + 14}" font-size="10">{kind}{x}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def origin_label(o: Origin) -> str:
    return f"{o[0]}{o[1]}"
