"""Partition functions of vertex- and edge-colouring models.

A vertex model sums over vertex colourings with a weight per vertex and a
(q, q) interaction per edge.  An edge model sums over edge colourings with a
weight per edge and, at each vertex, a weight depending on the tuple of
half-edge colours in a declared order (rotation order when present, else
(edge_index, end) lexicographic).  The half-edge inner product pairs a vertex
weight family against a two-argument weight on each edge's half-edge pair;
it is evaluated factored over edge blocks, enumerating only the support of
the pair weight, so monochrome or zero-sum pairings cost q^|E| terms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .enumeration import (
    DEFAULT_BLOCK,
    DEFAULT_MAX_TERMS,
    count_terms,
    index_blocks,
)
from .graphs import Multigraph, Orientation, RotationSystem, default_orientation
from .groups import Group, QFunction, monochrome_indicator, transform_by

__all__ = [
    "ModelValue",
    "VertexWeights",
    "VertexModel",
    "EdgeModel",
    "vertex_partition",
    "edge_partition",
    "halfedge_inner",
    "orthogonal_invariance_check",
    "edge_table_sum",
    "vertex_table_sum",
]


@dataclass(frozen=True)
class ModelValue:
    """A partition-function value with diagnostics."""

    value: complex
    imag_residual: float
    terms: int

    @classmethod
    def of(cls, value: complex, terms: int) -> "ModelValue":
        value = complex(value)
        return cls(value, abs(value.imag), terms)

    @property
    def real(self) -> float:
        return self.value.real

    def rounded(self, tol: float = 1e-6) -> int:
        """Nearest integer, verifying the value is integral to within tol."""
        n = round(self.value.real)
        resid = abs(self.value - n)
        if resid > tol * max(1.0, abs(n)):
            raise ValueError(f"value {self.value} is not integral (residual {resid})")
        return n


class VertexWeights:
    """A vertex weight family: one function per arity (vertex degree).

    Built either from a tuple function evaluated on demand or from explicit
    per-arity tables.  Tables are cached per arity.
    """

    def __init__(self, group: Group, table_fn=None, tables=None):
        self.group = group
        self._table_fn = table_fn
        self._tables: dict[int, np.ndarray] = dict(tables or {})

    def table(self, arity: int) -> np.ndarray:
        if arity not in self._tables:
            if self._table_fn is None:
                raise ValueError(f"no vertex weight for arity {arity}")
            self._tables[arity] = np.asarray(
                self._table_fn(arity), dtype=np.complex128
            ).reshape((self.group.q,) * arity)
        return self._tables[arity]

    @classmethod
    def uniform(cls, group: Group) -> "VertexWeights":
        return cls(group, lambda d: np.ones((group.q,) * d))

    @classmethod
    def from_tuple_function(cls, group: Group, fn) -> "VertexWeights":
        def build(d):
            tbl = np.empty((group.q,) * d, dtype=np.complex128)
            for idx in np.ndindex(*tbl.shape):
                tbl[idx] = fn(idx)
            return tbl

        return cls(group, build)

    @classmethod
    def from_tables(cls, group: Group, tables: dict[int, np.ndarray]) -> "VertexWeights":
        return cls(group, None, tables)

    @classmethod
    def perfect_matching(cls, group: Group) -> "VertexWeights":
        """Weight 1 on tuples with exactly one colour equal to 1."""
        return cls.from_tuple_function(
            group, lambda t: 1.0 if sum(1 for a in t if a == 1) == 1 else 0.0
        )

    def transformed(self, U: np.ndarray) -> "VertexWeights":
        """The family with U applied tensorially at every arity."""

        def build(d):
            base = QFunction(self.group, d, self.table(d).reshape(-1))
            return transform_by(base, U).as_tensor()

        return VertexWeights(self.group, build)


@dataclass(frozen=True)
class VertexModel:
    group: Group
    vertex_weight: QFunction  # arity 1
    edge_weight: QFunction  # arity 2, applied to (tail, head)

    def __post_init__(self):
        if self.vertex_weight.arity != 1 or self.edge_weight.arity != 2:
            raise ValueError("vertex model needs arity-1 and arity-2 weights")
        if self.vertex_weight.group.name != self.group.name:
            raise ValueError("group mismatch")


@dataclass(frozen=True)
class EdgeModel:
    group: Group
    vertex_weights: VertexWeights
    edge_weight: QFunction | None = None  # arity 1; None means uniform

    def __post_init__(self):
        if self.edge_weight is not None and self.edge_weight.arity != 1:
            raise ValueError("edge weight must have arity 1")


def _vertex_orders(g: Multigraph, rotation: RotationSystem | None):
    if rotation is None:
        return [g.halfedges_at(v) for v in range(g.num_vertices)]
    rotation.validate(g)
    return [rotation.order_at(v) for v in range(g.num_vertices)]


def edge_table_sum(
    g: Multigraph,
    q: int,
    vertex_tables,
    edge_vecs=None,
    rotation: RotationSystem | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    block: int = DEFAULT_BLOCK,
) -> ModelValue:
    """Sum over edge colourings of per-vertex table lookups times per-edge
    weights.  ``vertex_tables[v]`` is indexed by the half-edge colours at v
    in declared order (a loop's colour indexes twice)."""
    terms = count_terms(q, g.num_edges, max_terms)
    orders = _vertex_orders(g, rotation)
    total = 0.0 + 0.0j
    for chunk in index_blocks(q, g.num_edges, block):
        w = np.ones(chunk.shape[0], dtype=np.complex128)
        for v in range(g.num_vertices):
            tbl = vertex_tables[v]
            if tbl.ndim == 0:
                w *= complex(tbl)
            else:
                w *= tbl[tuple(chunk[:, e] for e, _end in orders[v])]
        if edge_vecs is not None:
            for e in range(g.num_edges):
                w *= edge_vecs[e][chunk[:, e]]
        total += w.sum()
    return ModelValue.of(total, terms)


def vertex_table_sum(
    g: Multigraph,
    q: int,
    edge_tables,
    vertex_vecs=None,
    orient: Orientation | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    block: int = DEFAULT_BLOCK,
) -> ModelValue:
    """Sum over vertex colourings of per-edge (q, q) lookups (tail, head)
    times optional per-vertex weights.  Loops look up (x_v, x_v)."""
    orient = orient or default_orientation(g)
    terms = count_terms(q, g.num_vertices, max_terms)
    total = 0.0 + 0.0j
    for chunk in index_blocks(q, g.num_vertices, block):
        w = np.ones(chunk.shape[0], dtype=np.complex128)
        for e in range(g.num_edges):
            tbl = edge_tables[e]
            w *= tbl[chunk[:, orient.tail(g, e)], chunk[:, orient.head(g, e)]]
        if vertex_vecs is not None:
            for v in range(g.num_vertices):
                w *= vertex_vecs[v][chunk[:, v]]
        total += w.sum()
    return ModelValue.of(total, terms)


def vertex_partition(
    g: Multigraph,
    model: VertexModel,
    orient: Orientation | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> ModelValue:
    gt = model.edge_weight.as_tensor()
    fv = model.vertex_weight.values
    return vertex_table_sum(
        g,
        model.group.q,
        [gt] * g.num_edges,
        [fv] * g.num_vertices,
        orient=orient,
        max_terms=max_terms,
    )


def edge_partition(
    g: Multigraph,
    model: EdgeModel,
    rotation: RotationSystem | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> ModelValue:
    tables = [model.vertex_weights.table(g.degree(v)) for v in range(g.num_vertices)]
    vecs = None
    if model.edge_weight is not None:
        vecs = [model.edge_weight.values] * g.num_edges
    return edge_table_sum(
        g, model.group.q, tables, vecs, rotation=rotation, max_terms=max_terms
    )


def halfedge_inner(
    g: Multigraph,
    weights: VertexWeights,
    pair_weight: QFunction,
    rotation: RotationSystem | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    block: int = DEFAULT_BLOCK,
) -> ModelValue:
    """Real-bilinear pairing of the vertex weight family against an arity-2
    weight applied to each edge's half-edge pair; enumerates support pairs
    per edge block."""
    if pair_weight.arity != 2:
        raise ValueError("pair weight must have arity 2")
    group = weights.group
    q = group.q
    supp = np.nonzero(np.abs(pair_weight.values) > 0)[0]
    if supp.size == 0:
        return ModelValue.of(0.0, 0)
    pair_ends = np.stack([supp // q, supp % q], axis=1)
    gvals = pair_weight.values[supp]
    radix = supp.size
    terms = count_terms(radix, g.num_edges, max_terms)
    orders = _vertex_orders(g, rotation)
    tables = [weights.table(g.degree(v)) for v in range(g.num_vertices)]
    total = 0.0 + 0.0j
    for chunk in index_blocks(radix, g.num_edges, block):
        w = np.ones(chunk.shape[0], dtype=np.complex128)
        for v in range(g.num_vertices):
            tbl = tables[v]
            if tbl.ndim == 0:
                w *= complex(tbl)
            else:
                w *= tbl[tuple(pair_ends[chunk[:, e], end] for e, end in orders[v])]
        for e in range(g.num_edges):
            w *= gvals[chunk[:, e]]
        total += w.sum()
    return ModelValue.of(total, terms)


def orthogonal_invariance_check(
    g: Multigraph,
    weights: VertexWeights,
    U: np.ndarray,
    tol: float = 1e-8,
    max_terms: int = DEFAULT_MAX_TERMS,
    rotation: RotationSystem | None = None,
) -> bool:
    """Monochrome pairing is invariant under an orthogonal change of the
    vertex weights, and U tensor U fixes the monochrome pair indicator."""
    group = weights.group
    mono = monochrome_indicator(group, 2)
    fixed = transform_by(mono, U)
    if np.max(np.abs(fixed.values - mono.values)) > tol:
        return False
    lhs = halfedge_inner(g, weights, mono, rotation=rotation, max_terms=max_terms)
    rhs = halfedge_inner(
        g, weights.transformed(U), mono, rotation=rotation, max_terms=max_terms
    )
    scale = max(1.0, abs(lhs.value), abs(rhs.value))
    return abs(lhs.value - rhs.value) <= tol * scale
