"""Classical m x n transportation polytopes with integer margins.

``P(a, b)`` is the set of nonnegative m x n matrices with row sums ``a`` and
column sums ``b``. Vertices are found by enumerating the spanning trees of
the complete bipartite graph K_{m,n}: each tree carries a unique edge
weighting meeting the margins, and the vertices are exactly the nonnegative
ones. All arithmetic is exact.

Cell coordinates ``(p, q)`` are 0-based; vertex labels of polar complexes
are 1-based (``u3`` is the cell ``(0, 2)``).
"""
from __future__ import annotations

import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from polydecomp.complex import ComplexError, SimplicialComplex, is_pure

Cell = tuple[int, int]


class PolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class Margins:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        for v in self.a + self.b:
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise PolytopeError(f"margins must be positive integers, got {v!r}")
        if sum(self.a) != sum(self.b):
            raise PolytopeError("empty polytope: row and column margins have different totals")
        m, n = len(self.a), len(self.b)
        if m < 2 or n < 2 or m * n <= 4:
            raise PolytopeError(f"degenerate size: {m} x {n} (need m, n >= 2 and mn > 4)")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.a), len(self.b)

    @property
    def total(self) -> int:
        return sum(self.a)


@dataclass(frozen=True)
class TransportationPolytope:
    margins: Margins
    dim: int
    facet_cells: tuple[Cell, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.margins.shape

    def to_json(self) -> str:
        return json.dumps({"rows": list(self.margins.a), "cols": list(self.margins.b)})


def make_polytope(a: Sequence[int], b: Sequence[int]) -> TransportationPolytope:
    margins = Margins(tuple(a), tuple(b))
    m, n = margins.shape
    total = margins.total
    cells = tuple((p, q) for p in range(m) for q in range(n)
                  if margins.a[p] + margins.b[q] < total)
    return TransportationPolytope(margins, (m - 1) * (n - 1), cells)


def polytope_from_json(text: str) -> TransportationPolytope:
    d = json.loads(text)
    return make_polytope(d["rows"], d["cols"])


def _subset_sums(values: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Each reachable nonempty subset sum mapped to one subset realizing it."""
    reach: dict[int, tuple[int, ...]] = {}
    for i, v in enumerate(values):
        new = {} if v in reach else {v: (i,)}
        for s, sub in reach.items():
            if s + v not in reach:
                new.setdefault(s + v, sub + (i,))
        reach.update(new)
    return reach


def is_nondegenerate(p: TransportationPolytope) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Nondegeneracy test; the witness ``(S, T)`` holds 0-based row and column indices.

    Proper subsets of the shorter margin are enumerated and matched against
    the subset sums of the longer one.
    """
    a, b = p.margins.a, p.margins.b
    swap = len(a) > len(b)
    short, long_ = (b, a) if swap else (a, b)
    sums = _subset_sums(long_)
    for size in range(1, len(short)):
        for sub in combinations(range(len(short)), size):
            s = sum(short[i] for i in sub)
            if s in sums:
                other = sums[s]
                return False, ((other, sub) if swap else (sub, other))
    return True, None


@dataclass(frozen=True)
class VertexMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def support(self) -> tuple[Cell, ...]:
        return tuple((p, q) for p, row in enumerate(self.entries)
                     for q, x in enumerate(row) if x > 0)

    def zero_cells(self) -> tuple[Cell, ...]:
        return tuple((p, q) for p, row in enumerate(self.entries)
                     for q, x in enumerate(row) if x == 0)

    def format(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def spanning_trees(m: int, n: int) -> Iterator[tuple[Cell, ...]]:
    """All spanning trees of K_{m,n}, as tuples of cells, by edge inclusion/exclusion."""
    edges = [(i, j) for i in range(m) for j in range(n)]
    need = m + n - 1

    def rec(idx, chosen, comp):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(edges) - idx < need - len(chosen):
            return
        i, j = edges[idx]
        x, y = comp[i], comp[m + j]
        if x != y:
            merged = [x if c == y else c for c in comp]
            chosen.append(edges[idx])
            yield from rec(idx + 1, chosen, merged)
            chosen.pop()
        yield from rec(idx + 1, chosen, comp)

    yield from rec(0, [], list(range(m + n)))


def tree_weights(margins: Margins, tree: Sequence[Cell]) -> dict[Cell, Fraction]:
    """The unique weighting of ``tree`` meeting the margins, by leaf elimination."""
    m, _ = margins.shape
    remaining = [Fraction(x) for x in margins.a + margins.b]
    incident: dict[int, set[Cell]] = {v: set() for v in range(len(remaining))}
    for p, q in tree:
        incident[p].add((p, q))
        incident[m + q].add((p, q))
    weights = {}
    leaves = [v for v, es in incident.items() if len(es) == 1]
    while leaves:
        v = leaves.pop()
        if len(incident[v]) != 1:
            continue
        (cell,) = incident[v]
        p, q = cell
        other = m + q if v == p else p
        w = remaining[v]
        weights[cell] = w
        remaining[v] = Fraction(0)
        remaining[other] -= w
        incident[v].clear()
        incident[other].discard(cell)
        if len(incident[other]) == 1:
            leaves.append(other)
    if len(weights) != len(tree) or any(remaining):
        raise AssertionError("leaf elimination did not consume the margins")
    return weights


def enumerate_vertices(p: TransportationPolytope) -> list[VertexMatrix]:
    """All vertices of ``p``, deduplicated and sorted by support."""
    m, n = p.shape
    found = set()
    for tree in spanning_trees(m, n):
        w = tree_weights(p.margins, tree)
        if any(x < 0 for x in w.values()):
            continue
        found.add(tuple(tuple(w.get((i, j), Fraction(0)) for j in range(n))
                        for i in range(m)))
    out = [VertexMatrix(e) for e in found]
    out.sort(key=lambda v: (v.support, v.entries))
    return out


def cell_label(p: TransportationPolytope, cell: Cell) -> str:
    i, j = cell
    if p.shape[0] == 2:
        return f"{'uv'[i]}{j + 1}"
    return f"x{i + 1}_{j + 1}"


def polar_complex(p: TransportationPolytope) -> SimplicialComplex:
    """Boundary complex of the polar of a simple transportation polytope.

    One vertex per facet cell, one facet per polytope vertex (the facet
    cells where that vertex is zero).
    """
    ok, _ = is_nondegenerate(p)
    if not ok:
        raise PolytopeError("polar not simplicial: the polytope is degenerate")
    index = {cell: i for i, cell in enumerate(p.facet_cells)}
    labels = [cell_label(p, cell) for cell in p.facet_cells]
    verts = enumerate_vertices(p)
    masks = []
    for v in verts:
        mask = 0
        for cell in v.zero_cells():
            if cell in index:
                mask |= 1 << index[cell]
        masks.append(mask)
    c = SimplicialComplex.from_masks(labels, masks)
    pure, _ = is_pure(c)
    if not pure or c.dim != p.dim - 1 or len(c) != len(verts):
        raise ComplexError("polar complex is not a pure simplicial sphere of the expected dimension")
    return c


def format_vertices(verts: Sequence[VertexMatrix]) -> str:
    """Vertex dump: one matrix per block, blocks separated by a blank line."""
    return "\n\n".join(v.format() for v in verts) + "\n"


def parse_vertices(text: str) -> list[VertexMatrix]:
    out = []
    for block in text.strip().split("\n\n"):
        rows = [tuple(Fraction(x) for x in line.split()) for line in block.strip().splitlines()]
        out.append(VertexMatrix(tuple(rows)))
    return out
