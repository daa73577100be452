"""Closed-form polars of the 2 x n transportation polytopes that are not wvd.

Vertices ``u_j`` and ``v_j`` stand for the facets ``x_{1,j} = 0`` and
``x_{2,j} = 0``. The facets are generated by subset enumeration only, so
they can be compared against :func:`polydecomp.transport.polar_complex` as an
independent check.

even, parameter m >= 3
    margins ``(2m+1, 2m+1)`` and ``2m+1`` columns of 2; dimension 2m.
    Facets: ``A | B`` with ``|A| = |B| = m`` using distinct columns.
odd, parameter m >= 3
    margins ``(2m-1, 2m+1)`` and ``2m`` columns of 2; dimension 2m-1.
    Facets: ``A | B`` with ``|A| = m``, ``|B| = m-1`` using distinct columns.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from polydecomp.complex import SimplicialComplex, deletion, is_pure


@dataclass(frozen=True)
class FamilySpec:
    parity: str
    m: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if not isinstance(self.m, int) or self.m < 3:
            raise ValueError(f"m must be an integer >= 3, got {self.m!r}")

    @property
    def columns(self) -> int:
        return 2 * self.m + 1 if self.parity == "even" else 2 * self.m

    @property
    def margins(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        m = self.m
        rows = (2 * m + 1, 2 * m + 1) if self.parity == "even" else (2 * m - 1, 2 * m + 1)
        return rows, (2,) * self.columns

    @property
    def polytope_dim(self) -> int:
        return self.columns - 1


def _labels(n: int) -> list[str]:
    return [f"u{j}" for j in range(1, n + 1)] + [f"v{j}" for j in range(1, n + 1)]


def _generate(n: int, size_u: int, size_v: int) -> SimplicialComplex:
    masks = []
    for a in combinations(range(n), size_u):
        rest = [j for j in range(n) if j not in a]
        amask = sum(1 << j for j in a)
        for b in combinations(rest, size_v):
            masks.append(amask | sum(1 << (n + j) for j in b))
    return SimplicialComplex.from_masks(_labels(n), masks)


def delta_even(m: int) -> SimplicialComplex:
    spec = FamilySpec("even", m)
    return _generate(spec.columns, m, m)


def delta_odd(m: int) -> SimplicialComplex:
    spec = FamilySpec("odd", m)
    return _generate(spec.columns, m, m - 1)


def generate(parity: str, m: int) -> SimplicialComplex:
    return delta_even(m) if parity == "even" else delta_odd(m)


def column_symmetry(n: int) -> list[dict[str, str]]:
    """Generators of S_n permuting columns, acting on ``u`` and ``v`` together."""
    def perm(images):
        out = {}
        for j, t in enumerate(images, 1):
            out[f"u{j}"] = f"u{t}"
            out[f"v{j}"] = f"v{t}"
        return out

    swap = [2, 1] + list(range(3, n + 1))
    cycle = list(range(2, n + 1)) + [1]
    return [perm(swap), perm(cycle)]


def column_symmetry_for(c: SimplicialComplex) -> list[dict[str, str]]:
    """Column generators for a complex labelled ``u1..un, v1..vn``."""
    n = c.n_vertices // 2
    if sorted(c.labels) != sorted(_labels(n)):
        raise ValueError("complex is not labelled u1..un, v1..vn")
    return column_symmetry(n)


@dataclass(frozen=True)
class Witnesses:
    """Named facets of ``delta_even(m)`` used to show impurity after two or three deletions.

    ``G_prime`` maps each ``v`` label to the facet ``{v1..v_{m+1}, u_{m+2}..u_{2m+1}} - {v}``.
    """

    F: frozenset[str]
    F_prime: frozenset[str]
    G: frozenset[str]
    G_prime: dict[str, frozenset[str]]

    @property
    def common(self) -> frozenset[str]:
        """``F - {u1}``, which equals ``F' - {u2}``."""
        return self.F & self.F_prime


def proof_witnesses(m: int, c: SimplicialComplex | None = None) -> Witnesses:
    FamilySpec("even", m)
    n = 2 * m + 1
    mid = [f"u{j}" for j in range(3, m + 2)]
    tail_v = [f"v{j}" for j in range(m + 2, n + 1)]
    tail_u = [f"u{j}" for j in range(m + 2, n + 1)]
    F = frozenset(["u1", *mid, *tail_v])
    F_prime = frozenset(["u2", *mid, *tail_v])
    G = frozenset([f"v{j}" for j in range(2, m + 2)] + tail_u)
    base = [f"v{j}" for j in range(1, m + 2)] + tail_u
    G_prime = {v: frozenset(base) - {v} for v in (f"v{j}" for j in range(1, m + 2))}
    w = Witnesses(F, F_prime, G, G_prime)
    facets = (c or delta_even(m)).label_sets()
    for face in (F, F_prime, G, *G_prime.values()):
        if face not in facets:
            raise AssertionError(f"{sorted(face)} is not a facet of delta_even({m})")
    return w


def delete_vertices(c: SimplicialComplex, labels) -> SimplicialComplex:
    """Delete vertices one after another (the result does not depend on the order)."""
    for lab in labels:
        c = deletion(c, [lab])
    return c


def impurity_witness(c: SimplicialComplex, labels) -> tuple[str, ...] | None:
    """Labels of an undersized facet left after deleting ``labels``, if any."""
    pure, w = is_pure(delete_vertices(c, labels))
    if pure:
        return None
    rest = delete_vertices(c, labels)
    return rest.names(w)
