"""Pure simplicial complexes stored as facet lists over a labelled vertex table.

A complex keeps only its facets. Faces are never materialized: a face is any
subset of a facet, and every query below works directly on the facet list.
Internally each face is an ``int`` bit mask over the vertex table (bit ``i``
set means vertex ``i`` belongs to the face). Publicly, faces are given and
returned as sorted tuples of vertex indices; most functions also accept a
sequence of labels or a raw mask.

The ``.cplx`` text format is one facet per line, labels separated by single
spaces, ``#`` comments and blank lines ignored.
"""
from __future__ import annotations

import logging
import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

logger = logging.getLogger(__name__)

LABEL_RE = re.compile(r"[A-Za-z0-9_+-]+\Z")

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Invalid input to a complex operation."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def maximal_masks(masks: Iterable[int]) -> tuple[list[int], int]:
    """Inclusion-maximal members of ``masks`` (deduplicated, lex-sorted).

    Returns the survivors and the number of distinct masks dropped because
    they were contained in another one.
    """
    distinct = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    dropped = 0
    for m in distinct:
        if any(m & ~k == 0 for k in kept):
            dropped += 1
        else:
            kept.append(m)
    kept.sort(key=bits)
    return kept, dropped


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``labels[i]`` is the printable name of vertex ``i``; ``masks`` holds the
    facets as bit masks, inclusion-maximal and sorted lexicographically by
    their index tuples. Instances are immutable. Two complexes compare equal
    when they have the same facets as sets of labels, regardless of how the
    vertex tables are ordered; use :func:`canonical_key` for the stricter
    index-level identity.
    """

    labels: tuple[str, ...]
    masks: tuple[int, ...]
    n_dropped: int = field(default=0, compare=False)

    @classmethod
    def from_masks(cls, labels: Sequence[str], masks: Iterable[int]) -> "SimplicialComplex":
        kept, dropped = maximal_masks(masks)
        return cls(tuple(labels), tuple(kept), dropped)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        if not self.masks:
            return -1
        return max(m.bit_count() for m in self.masks) - 1

    @property
    def facets(self) -> list[Face]:
        return [tuple(bits(m)) for m in self.masks]

    @property
    def vertex_mask(self) -> int:
        out = 0
        for m in self.masks:
            out |= m
        return out

    def facet_labels(self) -> list[tuple[str, ...]]:
        return [self.names(m) for m in self.masks]

    def names(self, face) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(self.mask(face)))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ComplexError(f"unknown vertex label {label!r}") from None

    def mask(self, face) -> int:
        """Bit mask of ``face``: a mask, a sequence of indices, or of labels."""
        if isinstance(face, int):
            if face >> len(self.labels):
                raise ComplexError("face mask references vertices outside the table")
            return face
        out = 0
        for v in face:
            i = self.index(v) if isinstance(v, str) else int(v)
            if not 0 <= i < len(self.labels):
                raise ComplexError(f"vertex index {i} outside the table")
            out |= 1 << i
        return out

    def contains_face(self, face) -> bool:
        f = self.mask(face)
        return any(m & f == f for m in self.masks)

    def facets_containing(self, face) -> list[int]:
        f = self.mask(face)
        return [m for m in self.masks if m & f == f]

    def label_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.names(m)) for m in self.masks)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.label_sets() == other.label_sets()

    def __hash__(self):
        return hash(self.label_sets())

    def __len__(self):
        return len(self.masks)

    def __repr__(self):
        return (f"SimplicialComplex(n_vertices={self.n_vertices}, "
                f"n_facets={len(self.masks)}, dim={self.dim})")


def from_facets(facet_label_lists: Iterable[Sequence[str]]) -> SimplicialComplex:
    """Build a complex from facets given as lists of vertex labels.

    Labels are interned in first-appearance order. Duplicate facets are
    merged and facets contained in other facets are dropped; the number of
    dropped faces is recorded in ``n_dropped``.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    masks = []
    for facet in facet_label_lists:
        facet = list(facet)
        if not facet:
            raise ComplexError("facets must be nonempty")
        if len(set(facet)) != len(facet):
            raise ComplexError(f"duplicate label inside facet {facet}")
        m = 0
        for lab in facet:
            if not isinstance(lab, str) or not LABEL_RE.match(lab):
                raise ComplexError(f"invalid vertex label {lab!r}")
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            m |= 1 << index[lab]
        masks.append(m)
    if not masks:
        raise ComplexError("empty complex")
    c = SimplicialComplex.from_masks(labels, masks)
    if c.n_dropped:
        logger.warning("dropped %d non-maximal face(s)", c.n_dropped)
    return c


def _compact(labels: Sequence[str], masks: Sequence[int]) -> SimplicialComplex:
    """Re-index ``masks`` onto the vertices they actually use."""
    used = 0
    for m in masks:
        used |= m
    old = bits(used)
    remap = {1 << o: 1 << n for n, o in enumerate(old)}
    new_masks = []
    for m in masks:
        nm = 0
        while m:
            low = m & -m
            nm |= remap[low]
            m ^= low
        new_masks.append(nm)
    return SimplicialComplex.from_masks([labels[o] for o in old], new_masks)


def is_pure(c: SimplicialComplex) -> tuple[bool, Face | None]:
    """Whether all facets have the maximal dimension.

    On failure the witness is the first facet of smaller dimension.
    """
    top = c.dim + 1
    for m in c.masks:
        if m.bit_count() != top:
            return False, tuple(bits(m))
    return True, None


def is_simplex(c: SimplicialComplex) -> bool:
    return len(c.masks) == 1


def link(c: SimplicialComplex, f, compact: bool = True) -> SimplicialComplex:
    """Link of the face ``f``: faces disjoint from ``f`` whose union with it is a face.

    With ``compact=False`` the result keeps the vertex table of ``c``.
    """
    fm = c.mask(f)
    star = [m & ~fm for m in c.masks if m & fm == fm]
    if not star:
        raise ComplexError("not a face")
    if compact:
        return _compact(c.labels, star)
    return SimplicialComplex.from_masks(c.labels, star)


def deletion(c: SimplicialComplex, f, compact: bool = True) -> SimplicialComplex:
    """Antistar of ``f``: the faces of ``c`` that do not contain ``f``.

    Deleting a set that is not a face returns ``c`` unchanged. The empty
    face is contained in every face, so deleting it is rejected.
    """
    fm = c.mask(f)
    if fm == 0:
        raise ComplexError("deleting the empty face leaves no faces")
    if not any(m & fm == fm for m in c.masks):
        return c
    out = []
    fbits = [1 << i for i in bits(fm)]
    for m in c.masks:
        if m & fm == fm:
            out.extend(m ^ b for b in fbits)
        else:
            out.append(m)
    out = [m for m in out if m]
    if not out:
        # only the empty face survives
        out = [0]
    if compact:
        return _compact(c.labels, out)
    return SimplicialComplex.from_masks(c.labels, out)


def _check_dim(c: SimplicialComplex, k: int) -> None:
    if not -1 <= k <= c.dim:
        raise ComplexError(f"k={k} outside [-1, {c.dim}]")


def face_masks_of_dim(c: SimplicialComplex, k: int) -> list[int]:
    """All ``k``-dimensional faces as masks, lexicographically sorted."""
    _check_dim(c, k)
    seen = set()
    for m in c.masks:
        vs = bits(m)
        if len(vs) > k:
            seen.update(mask_of(s) for s in combinations(vs, k + 1))
    return sorted(seen, key=bits)


def faces_of_dim(c: SimplicialComplex, k: int) -> list[Face]:
    return [tuple(bits(m)) for m in face_masks_of_dim(c, k)]


def f_count(c: SimplicialComplex, k: int) -> int:
    """Number of ``k``-dimensional faces."""
    return len(face_masks_of_dim(c, k))


@dataclass(frozen=True)
class FacetGraph:
    """Facets of a pure complex joined when they share a ridge."""

    nodes: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]

    def bfs(self, source: int) -> list[int]:
        """Distances from ``source``; ``-1`` marks unreachable nodes."""
        dist = [-1] * len(self.nodes)
        dist[source] = 0
        queue = deque([source])
        while queue:
            i = queue.popleft()
            for j in self.adjacency[i]:
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.edges)
        return g


def ridge_graph(c: SimplicialComplex) -> FacetGraph:
    pure, _ = is_pure(c)
    if not pure:
        raise ComplexError("ridge graph requires pure complex")
    by_ridge: dict[int, list[int]] = {}
    for i, m in enumerate(c.masks):
        for b in bits(m):
            by_ridge.setdefault(m ^ (1 << b), []).append(i)
    adj: list[set[int]] = [set() for _ in c.masks]
    for group in by_ridge.values():
        for i, j in combinations(group, 2):
            adj[i].add(j)
            adj[j].add(i)
    return FacetGraph(c.masks, tuple(tuple(sorted(a)) for a in adj))


@dataclass(frozen=True)
class DiameterReport:
    """Facet-ridge diameter of a pure complex.

    ``diameter`` is ``None`` when the ridge graph is disconnected, in which
    case ``eccentric_pair`` is also ``None``.
    """

    diameter: int | None
    num_vertices: int
    dim: int
    eccentric_pair: tuple[Face, Face] | None

    @property
    def connected(self) -> bool:
        return self.diameter is not None


def diameter(c: SimplicialComplex) -> DiameterReport:
    """All-pairs BFS over the ridge graph."""
    g = ridge_graph(c)
    best, pair = -1, None
    for i in range(len(g.nodes)):
        dist = g.bfs(i)
        if min(dist) < 0:
            return DiameterReport(None, c.n_vertices, c.dim, None)
        for j, d in enumerate(dist):
            if d > best:
                best, pair = d, (i, j)
    i, j = pair
    return DiameterReport(best, c.n_vertices, c.dim,
                          (tuple(bits(g.nodes[i])), tuple(bits(g.nodes[j]))))


def distance(c: SimplicialComplex, f1, f2) -> int | None:
    """Facet-ridge distance between two facets, ``None`` if unreachable."""
    g = ridge_graph(c)
    i, j = g.nodes.index(c.mask(f1)), g.nodes.index(c.mask(f2))
    d = g.bfs(i)[j]
    return None if d < 0 else d


def canonical_key(c: SimplicialComplex) -> tuple:
    """Exact identity key: vertex table plus facet masks. No isomorphism reduction."""
    return (c.labels, c.masks)


def to_cplx(c: SimplicialComplex, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    rows = sorted(tuple(sorted(c.names(m))) for m in c.masks)
    lines.extend(" ".join(r) for r in rows)
    return "\n".join(lines) + "\n"


def parse_cplx(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "  " in line or "\t" in line:
            raise ComplexError(f"line {lineno}: labels must be separated by single spaces")
        facets.append(line.split(" "))
    return from_facets(facets)


def read_cplx(path) -> SimplicialComplex:
    return parse_cplx(Path(path).read_text(encoding="utf-8"))


def write_cplx(c: SimplicialComplex, path, header: str | None = None) -> None:
    Path(path).write_text(to_cplx(c, header), encoding="utf-8")
