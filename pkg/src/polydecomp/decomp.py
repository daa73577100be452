"""Exact (weak) k-decomposability search with replayable certificates.

A complex is k-decomposable when it is pure and either a simplex, or some
face ``tau`` with ``dim(tau) <= k`` can be shed: the deletion of ``tau``
keeps the full dimension and is k-decomposable, and the link of ``tau`` has
dimension ``dim - |tau|`` and is k-decomposable. The weak notion drops the
link condition.

The search is exhaustive. Candidate shedding faces are tried in order of
dimension, then lexicographically by vertex index, and results are memoized
on the exact facet set of each visited subcomplex. Only booleans are
memoized; the certificate is rebuilt along the successful path afterwards.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Union

from polydecomp.complex import (
    ComplexError,
    SimplicialComplex,
    bits,
    deletion,
    diameter,
    f_count,
    is_pure,
    is_simplex,
    link,
    mask_of,
)

STRONG = "strong"
WEAK = "weak"


class SearchLimitExceeded(RuntimeError):
    """Raised when a search visits more nodes than ``limit_nodes``."""


@dataclass(frozen=True)
class Leaf:
    facet: tuple[str, ...]


@dataclass(frozen=True)
class Node:
    shed: tuple[str, ...]
    deletion: "Certificate"
    link: "Certificate | None" = None


Certificate = Union[Leaf, Node]


def certificate_to_dict(cert: Certificate) -> dict:
    if isinstance(cert, Leaf):
        return {"shed": None, "deletion": None, "link": None, "facet": list(cert.facet)}
    return {
        "shed": list(cert.shed),
        "deletion": certificate_to_dict(cert.deletion),
        "link": None if cert.link is None else certificate_to_dict(cert.link),
    }


def certificate_from_dict(d: dict) -> Certificate:
    if "facet" in d:
        return Leaf(tuple(d["facet"]))
    lk = d.get("link")
    return Node(tuple(d["shed"]), certificate_from_dict(d["deletion"]),
                None if lk is None else certificate_from_dict(lk))


def certificate_depth(cert: Certificate) -> int:
    if isinstance(cert, Leaf):
        return 0
    return 1 + certificate_depth(cert.deletion)


def shedding_order(cert: Certificate) -> list[tuple[str, ...]]:
    """Faces shed along the deletion spine of a certificate."""
    out = []
    while isinstance(cert, Node):
        out.append(cert.shed)
        cert = cert.deletion
    return out


@dataclass
class Decision:
    result: bool
    mode: str
    k: int
    certificate: Certificate | None = None
    nodes_explored: int = 0
    memo_hits: int = 0
    reason: str | None = None
    trace: list[tuple[tuple[str, ...], str]] = field(default_factory=list)

    def __bool__(self):
        return self.result

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "k": self.k,
            "result": self.result,
            "certificate": None if self.certificate is None
            else certificate_to_dict(self.certificate),
            "stats": {"nodes": self.nodes_explored, "memo_hits": self.memo_hits},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def decision_from_dict(d: dict) -> Decision:
    cert = d.get("certificate")
    stats = d.get("stats", {})
    return Decision(bool(d["result"]), d["mode"], int(d["k"]),
                    None if cert is None else certificate_from_dict(cert),
                    stats.get("nodes", 0), stats.get("memo_hits", 0))


# -- internal mask-level operations on a fixed vertex table -----------------

def _dim(masks) -> int:
    return max(m.bit_count() for m in masks) - 1


def _pure(masks) -> bool:
    n = masks[0].bit_count()
    return all(m.bit_count() == n for m in masks)


def _delete(masks, f: int) -> tuple[int, ...]:
    """Deletion of ``f`` from a pure complex, as a sorted mask tuple."""
    fb = [1 << i for i in bits(f)]
    kept, shrunk = [], set()
    for m in masks:
        if m & f == f:
            shrunk.update(m ^ b for b in fb)
        else:
            kept.append(m)
    # a shrunk facet is non-maximal iff it is a ridge of a kept facet
    ridges = set()
    for m in kept:
        x = m
        while x:
            low = x & -x
            ridges.add(m ^ low)
            x ^= low
    out = kept + [r for r in shrunk if r and r not in ridges]
    return tuple(sorted(out)) or (0,)


def _link(masks, f: int) -> tuple[int, ...]:
    # distinct facets of a pure complex stay distinct and maximal
    return tuple(sorted(m & ~f for m in masks if m & f == f))


def _candidates(masks, k: int) -> list[int]:
    """Nonempty faces of dimension <= k, by dimension then lexicographically."""
    out = []
    top = _dim(masks)
    for size in range(1, min(k, top) + 2):
        seen = set()
        for m in masks:
            vs = bits(m)
            if len(vs) >= size:
                seen.update(mask_of(s) for s in combinations(vs, size))
        out.extend(sorted(seen, key=bits))
    return out


class _Search:
    def __init__(self, k: int, strong: bool, memoize: bool = True,
                 limit_nodes: int | None = None):
        self.k = k
        self.strong = strong
        self.memoize = memoize
        self.limit_nodes = limit_nodes
        self.memo: dict[tuple[int, ...], bool] = {}
        self.nodes = 0
        self.memo_hits = 0

    def _tick(self):
        self.nodes += 1
        if self.limit_nodes is not None and self.nodes > self.limit_nodes:
            raise SearchLimitExceeded(f"search exceeded {self.limit_nodes} nodes")

    def why_not(self, masks, tau: int) -> str | None:
        """Reason ``tau`` cannot be shed from ``masks``; ``None`` if it can."""
        d = _dim(masks)
        dm = _delete(masks, tau)
        if _dim(dm) != d:
            return "dimension drop"
        if not _pure(dm):
            return "impure deletion"
        if self.strong:
            lm = _link(masks, tau)
            if _dim(lm) != d - tau.bit_count():
                return "link dimension"
            if not _pure(lm):
                return "impure link"
        if not self.decide(dm):
            return "deletion not decomposable"
        if self.strong and not self.decide(_link(masks, tau)):
            return "link not decomposable"
        return None

    def decide(self, masks: tuple[int, ...], candidates=None) -> bool:
        if self.memoize and masks in self.memo:
            self.memo_hits += 1
            return self.memo[masks]
        self._tick()
        if not _pure(masks):
            result = False
        elif len(masks) == 1:
            result = True
        else:
            cands = _candidates(masks, self.k) if candidates is None else candidates
            result = any(self.why_not(masks, t) is None for t in cands)
        if self.memoize:
            self.memo[masks] = result
        return result

    def certificate(self, labels, masks, candidates=None) -> Certificate:
        if len(masks) == 1:
            return Leaf(tuple(labels[i] for i in bits(masks[0])))
        cands = _candidates(masks, self.k) if candidates is None else candidates
        for t in cands:
            if self.why_not(masks, t) is None:
                dcert = self.certificate(labels, _delete(masks, t))
                lcert = self.certificate(labels, _link(masks, t)) if self.strong else None
                return Node(tuple(labels[i] for i in bits(t)), dcert, lcert)
        raise AssertionError("certificate requested for a non-decomposable complex")


def _orbit_representatives(c: SimplicialComplex, cands: list[int], generators) -> list[int]:
    """First candidate of each orbit under the group generated by ``generators``.

    Each generator maps labels to labels and must be an automorphism of ``c``.
    """
    perms = []
    for g in generators:
        perm = [c.index(g.get(lab, lab)) for lab in c.labels]
        if sorted(perm) != list(range(c.n_vertices)):
            raise ComplexError("symmetry generator is not a permutation of the vertices")
        perms.append(perm)

    def apply(perm, m):
        return mask_of(perm[i] for i in bits(m))

    facets = set(c.masks)
    for perm in perms:
        if {apply(perm, m) for m in facets} != facets:
            raise ComplexError("symmetry generator is not an automorphism of the complex")
    seen: set[int] = set()
    reps = []
    for t in cands:
        if t in seen:
            continue
        reps.append(t)
        stack = [t]
        seen.add(t)
        while stack:
            x = stack.pop()
            for perm in perms:
                y = apply(perm, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return reps


def _top_level_job(args):
    masks, tau, k, strong, memoize, limit = args
    s = _Search(k, strong, memoize, limit)
    ok = s.why_not(masks, tau) is None
    return tau, ok, s.nodes, s.memo_hits


def decide(c: SimplicialComplex, k: int, mode: str, *, memoize: bool = True,
           limit_nodes: int | None = None, symmetry=None, trace: bool = False,
           jobs: int = 1) -> Decision:
    """Decide k-decomposability in ``mode`` ("strong" or "weak")."""
    if mode not in (STRONG, WEAK):
        raise ValueError(f"unknown mode {mode!r}")
    if not 0 <= k <= c.dim:
        raise ComplexError(f"k={k} outside [0, {c.dim}]")
    strong = mode == STRONG
    pure, _ = is_pure(c)
    if not pure:
        return Decision(False, mode, k, reason="impure", nodes_explored=1)
    masks = tuple(sorted(c.masks))
    s = _Search(k, strong, memoize, limit_nodes)
    if len(masks) == 1:
        s._tick()
        return Decision(True, mode, k, s.certificate(c.labels, masks), s.nodes, 0)

    cands = _candidates(masks, k)
    if symmetry:
        cands = _orbit_representatives(c, cands, symmetry)
    s._tick()

    if jobs > 1:
        # top-level candidates fan out to worker processes, each with its own memo
        per_job = None if limit_nodes is None else limit_nodes
        winner = None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(_top_level_job, (masks, t, k, strong, memoize, per_job))
                    for t in cands]
            for fut in as_completed(futs):
                tau, ok, n, h = fut.result()
                s.nodes += n
                s.memo_hits += h
                if ok:
                    winner = tau
                    for other in futs:
                        other.cancel()
                    break
        if winner is None:
            return Decision(False, mode, k, None, s.nodes, s.memo_hits)
        cert = s.certificate(c.labels, masks, [winner])
        return Decision(True, mode, k, cert, s.nodes, s.memo_hits)

    trace_rows = []
    result = False
    for t in cands:
        why = s.why_not(masks, t)
        if trace:
            trace_rows.append((c.names(t), why or "ok"))
        if why is None:
            result = True
            break
    if s.memoize:
        s.memo[masks] = result
    cert = s.certificate(c.labels, masks, cands) if result else None
    return Decision(result, mode, k, cert, s.nodes, s.memo_hits, trace=trace_rows)


def is_k_decomposable(c: SimplicialComplex, k: int, **kw) -> Decision:
    """Decide k-decomposability (shedding faces must also have decomposable links).

    Keyword options: ``memoize`` (default True), ``limit_nodes``,
    ``symmetry`` (label permutations that are automorphisms of ``c``; used to
    prune first-level candidates to orbit representatives), ``trace``
    (record the first-level failure reason of each candidate) and ``jobs``
    (worker processes for the first level; the certificate is then any
    valid one rather than the lexicographically first).
    """
    return decide(c, k, STRONG, **kw)


def is_weakly_k_decomposable(c: SimplicialComplex, k: int, **kw) -> Decision:
    """Decide weak k-decomposability (no condition on links). See :func:`is_k_decomposable`."""
    return decide(c, k, WEAK, **kw)


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(c: SimplicialComplex, cert: Certificate, k: int,
                       mode: str) -> Verification:
    """Replay ``cert`` against ``c`` from scratch using the public complex operations."""
    if mode not in (STRONG, WEAK):
        return Verification(False, f"unknown mode {mode!r}")

    def walk(cx: SimplicialComplex, node, path: str) -> str | None:
        pure, _ = is_pure(cx)
        if not pure:
            return f"{path}: complex is impure"
        if isinstance(node, Leaf):
            if not is_simplex(cx):
                return f"{path}: leaf reached but complex has {len(cx)} facets"
            if set(node.facet) != set(cx.names(cx.masks[0])):
                return f"{path}: leaf facet does not match"
            return None
        if not isinstance(node, Node):
            return f"{path}: malformed certificate node"
        try:
            tau = cx.mask(list(node.shed))
        except ComplexError as exc:
            return f"{path}: {exc}"
        size = tau.bit_count()
        if size == 0 or size - 1 > k:
            return f"{path}: shed face {list(node.shed)} has dimension {size - 1} > k={k}"
        if not cx.contains_face(tau):
            return f"{path}: shed set {list(node.shed)} is not a face"
        d = cx.dim
        dl = deletion(cx, tau)
        if dl.dim != d:
            return f"{path}: deletion drops dimension"
        err = walk(dl, node.deletion, path + "/del")
        if err:
            return err
        if mode == WEAK:
            if node.link is not None:
                return f"{path}: weak certificate carries a link certificate"
            return None
        if node.link is None:
            return f"{path}: strong certificate is missing a link certificate"
        lk = link(cx, tau)
        if lk.dim != d - size:
            return f"{path}: link has dimension {lk.dim}, expected {d - size}"
        return walk(lk, node.link, path + "/lk")

    try:
        err = walk(c, cert, "root")
    except (ComplexError, AttributeError, TypeError) as exc:
        err = f"malformed certificate: {exc}"
    return Verification(err is None, err or "")


@dataclass(frozen=True)
class BoundReport:
    """``lhs`` is the facet-ridge diameter; ``rhs`` the bound it is checked against."""

    bound_name: str
    lhs: int
    rhs: int
    satisfied: bool
    vacuous: bool = False

    def to_dict(self) -> dict:
        return {"bound": self.bound_name, "diameter": self.lhs, "bound_value": self.rhs,
                "satisfied": self.satisfied, "vacuous": self.vacuous}


def _connected_diameter(c: SimplicialComplex) -> int:
    rep = diameter(c)
    if not rep.connected:
        raise ComplexError("complex is disconnected")
    return rep.diameter


def check_billera_provan(c: SimplicialComplex, k: int, mode: str,
                         decision: Decision | None = None) -> BoundReport:
    """Compare the diameter with the bound implied by (weak) k-decomposability.

    Strong: ``f_k - C(d, k+1)`` with ``d = dim + 1``; weak: ``2 f_k``. The
    decision is computed when not supplied; if it is negative the report is
    marked vacuous since the bound need not hold.
    """
    lhs = _connected_diameter(c)
    fk = f_count(c, k)
    if mode == STRONG:
        name, rhs = "billera_provan_strong", fk - comb(c.dim + 1, k + 1)
    elif mode == WEAK:
        name, rhs = "billera_provan_weak", 2 * fk
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if decision is None:
        decision = decide(c, k, mode)
    return BoundReport(name, lhs, rhs, lhs <= rhs, vacuous=not decision.result)


def check_hirsch(c: SimplicialComplex) -> BoundReport:
    """Diameter against ``n - d`` with ``n`` vertices and ``d = dim + 1``."""
    lhs = _connected_diameter(c)
    rhs = c.n_vertices - (c.dim + 1)
    return BoundReport("hirsch", lhs, rhs, lhs <= rhs)
