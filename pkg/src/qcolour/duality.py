"""Identities between vertex models, edge models and weight enumerators.

Covers the generalized Poisson duality between boundary- and coboundary-
weighted sums, the flow/tension weight-enumerator models, the Tutte
hyperbola edge model, spectral conversion of symmetric vertex models to
edge models, the two-variable boundary generating function and its
principal specialization, and the GF(4) flow identity for cubic graphs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .enumeration import (
    DEFAULT_BLOCK,
    DEFAULT_MAX_TERMS,
    boundary_chunk,
    coboundary_chunk,
    count_terms,
    index_blocks,
)
from .graphs import Multigraph, Orientation, rank
from .groups import (
    Group,
    QFunction,
    convolve,
    cyclic_group,
    fourier,
    gf4,
    inverse_fourier,
    negate,
)
from .models import ModelValue, edge_table_sum, vertex_table_sum
from .oracles import ConsistencyError, flow_polynomial

__all__ = [
    "XQParams",
    "tension_vertex_sum",
    "boundary_edge_sum",
    "general_duality_sides",
    "general_duality_check",
    "flow_cwe_vertex_model",
    "flow_cwe_edge_model",
    "tension_cwe_expectation",
    "tutte_edge_model",
    "flow_cubic_edge_model",
    "spectral_split",
    "spectral_edge_model",
    "xq_evaluate",
    "xq_dual",
    "principal_specialization",
    "symmetric_weight_root",
    "xq_edge_model",
    "gf4_flow_identity_check",
]


def _as_weights(group: Group, table) -> np.ndarray:
    vec = np.asarray(list(table), dtype=np.complex128)
    if vec.shape != (group.q,):
        raise ValueError(f"weight table must have {group.q} entries")
    return vec


def tension_vertex_sum(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    vertex_vecs,
    edge_vecs,
    max_terms: int = DEFAULT_MAX_TERMS,
    block: int = DEFAULT_BLOCK,
) -> ModelValue:
    """sum over vertex colourings x of prod_v vv[x_v] * prod_e ev[(dx)_e]."""
    terms = count_terms(group.q, g.num_vertices, max_terms)
    total = 0.0 + 0.0j
    for X in index_blocks(group.q, g.num_vertices, block):
        D = coboundary_chunk(g, orient, group, X)
        w = np.ones(X.shape[0], dtype=np.complex128)
        for v in range(g.num_vertices):
            w *= vertex_vecs[v][X[:, v]]
        for e in range(g.num_edges):
            w *= edge_vecs[e][D[:, e]]
        total += w.sum()
    return ModelValue.of(total, terms)


def boundary_edge_sum(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    vertex_vecs,
    edge_vecs,
    max_terms: int = DEFAULT_MAX_TERMS,
    block: int = DEFAULT_BLOCK,
) -> ModelValue:
    """sum over edge colourings y of prod_v vv[(dy)_v] * prod_e ev[y_e]."""
    terms = count_terms(group.q, g.num_edges, max_terms)
    total = 0.0 + 0.0j
    for Y in index_blocks(group.q, g.num_edges, block):
        B = boundary_chunk(g, orient, group, Y)
        w = np.ones(Y.shape[0], dtype=np.complex128)
        for v in range(g.num_vertices):
            w *= vertex_vecs[v][B[:, v]]
        for e in range(g.num_edges):
            w *= edge_vecs[e][Y[:, e]]
        total += w.sum()
    return ModelValue.of(total, terms)


def general_duality_sides(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    f_vecs,
    g_vecs,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[complex, complex]:
    """Both sides of the coboundary/boundary duality.

    Left: q^(-|V|/2) sum_x prod f_v(x_v) prod conj(g_e)((dx)_e).
    Right: q^(-|E|/2) sum_y prod (Ff_v)((dy)_v) prod conj((Fg_e))(y_e).
    """
    q = group.q
    f_vecs = [_as_weights(group, f) for f in f_vecs]
    g_vecs = [_as_weights(group, h) for h in g_vecs]
    lhs = tension_vertex_sum(
        g, group, orient, f_vecs, [h.conj() for h in g_vecs], max_terms
    )
    F = group.fourier_matrix()
    fF = [F @ f for f in f_vecs]
    gF = [(F @ h).conj() for h in g_vecs]
    rhs = boundary_edge_sum(g, group, orient, fF, gF, max_terms)
    return (
        q ** (-g.num_vertices / 2) * lhs.value,
        q ** (-g.num_edges / 2) * rhs.value,
    )


def general_duality_check(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    f_vecs,
    g_vecs,
    tol: float = 1e-8,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> bool:
    lhs, rhs = general_duality_sides(g, group, orient, f_vecs, g_vecs, max_terms)
    return abs(lhs - rhs) <= tol * max(1.0, abs(lhs), abs(rhs))


def _difference_matrix(group: Group, vec: np.ndarray) -> np.ndarray:
    """M[a, b] = vec[a - b]."""
    return vec[group.sub]


def flow_cwe_vertex_model(
    g: Multigraph, group: Group, gtable, max_terms: int = DEFAULT_MAX_TERMS
) -> ModelValue:
    """Vertex-colouring route to the complete weight enumerator of flows
    evaluated at g * g^N: q^(-|V|) sum_x prod_e sum_b prod over the edge's
    half-edges of (Fg)(x_v - b).  A loop's factor appears squared."""
    gvec = _as_weights(group, gtable)
    gF = group.fourier_matrix() @ gvec
    A = _difference_matrix(group, gF)  # A[x, b] = gF(x - b)
    M = A @ A.T  # M[x1, x2] = sum_b gF(x1-b) gF(x2-b)
    mv = vertex_table_sum(g, group.q, [M] * g.num_edges, max_terms=max_terms)
    return ModelValue.of(group.q ** (-g.num_vertices) * mv.value, mv.terms)


def _sum_over_shift_table(q: int, svec: np.ndarray, M: np.ndarray, d: int):
    """Table T(c_1..c_d) = sum_a svec[a] * prod_i M[a, c_i]."""
    acc = svec.reshape((q,) + (1,) * d).astype(np.complex128)
    acc = np.broadcast_to(acc, (q,) * (d + 1)).copy()
    for i in range(d):
        shape = [1] * (d + 1)
        shape[0] = q
        shape[i + 1] = q
        acc *= M.reshape(shape)
    return acc.sum(axis=0)


def flow_cwe_edge_model(
    g: Multigraph, group: Group, gtable, max_terms: int = DEFAULT_MAX_TERMS
) -> ModelValue:
    """Edge-colouring route to the same enumerator: q^(-|V|) sum_y prod_v
    sum_a prod over half-edges at v of (Fg)(a - y_e)."""
    gvec = _as_weights(group, gtable)
    gF = group.fourier_matrix() @ gvec
    M = _difference_matrix(group, gF)  # M[a, c] = gF(a - c)
    ones = np.ones(group.q, dtype=np.complex128)
    tables = [
        _sum_over_shift_table(group.q, ones, M, g.degree(v))
        for v in range(g.num_vertices)
    ]
    mv = edge_table_sum(g, group.q, tables, max_terms=max_terms)
    return ModelValue.of(group.q ** (-g.num_vertices) * mv.value, mv.terms)


def tension_cwe_expectation(
    g: Multigraph, group: Group, ftable, max_terms: int = DEFAULT_MAX_TERMS
) -> ModelValue:
    """Half-edge expectation route to the complete weight enumerator of
    tensions at f * f^N: q^(r(E)-|V|) sum_x prod_e sum_b prod f(x_v - b)."""
    fvec = _as_weights(group, ftable)
    A = _difference_matrix(group, fvec)
    M = A @ A.T
    mv = vertex_table_sum(g, group.q, [M] * g.num_edges, max_terms=max_terms)
    return ModelValue.of(group.q ** (rank(g) - g.num_vertices) * mv.value, mv.terms)


def _colour_count_table(q: int, d: int, base, bonus) -> np.ndarray:
    """Table T(c_1..c_d) = sum_a base^(multiplicity of a among the c_i);
    entries for absent colours contribute bonus each (bonus = base^0)."""
    tbl = np.empty((q,) * d, dtype=np.complex128)
    for idx in np.ndindex(*tbl.shape):
        counts = np.bincount(idx, minlength=q) if d else np.zeros(q, dtype=int)
        tbl[idx] = sum(base**c if c else bonus for c in counts)
    return tbl


def tutte_edge_model(
    g: Multigraph, q: int, s, max_terms: int = DEFAULT_MAX_TERMS
) -> ModelValue:
    """Uniform edge q-colouring model whose partition function equals
    (s^2-1)^(|E|-r(E)) T(G; s^2, (s^2-1+q)/(s^2-1)).

    q^(-|E|-|V|) (s-1)^(2|E|) sum_y prod_v sum_a t^(half-edges at v coloured a)
    with t = (s-1+q)/(s-1); a loop counts its colour twice at its vertex.
    """
    if s == 1:
        raise ValueError("s = 1 is a pole of the edge-model weights")
    t = (s - 1 + q) / (s - 1)
    tables = {}
    for v in range(g.num_vertices):
        tables.setdefault(g.degree(v), _colour_count_table(q, g.degree(v), t, 1.0))
    mv = edge_table_sum(
        g,
        q,
        [tables[g.degree(v)] for v in range(g.num_vertices)],
        max_terms=max_terms,
    )
    pref = q ** (-g.num_edges - g.num_vertices) * (s - 1) ** (2 * g.num_edges)
    return ModelValue.of(pref * mv.value, mv.terms)


def flow_cubic_edge_model(
    g: Multigraph,
    q: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    tol: float = 1e-6,
) -> int:
    """Edge-model count of nowhere-zero flows of a 3-regular graph:
    q^(-|E|) 2^|V| sum_y (1-q)^(monochrome vertices) (1-q/2)^(|V| - rainbow
    vertices), rounded to an integer."""
    if not g.is_regular(3):
        raise ValueError("graph must be 3-regular")

    def weight(idx):
        a, b, c = idx
        if a == b == c:
            return (1 - q) * (1 - q / 2)
        if a != b and b != c and a != c:
            return 1.0
        return 1 - q / 2

    tbl = np.empty((q, q, q), dtype=np.complex128)
    for idx in np.ndindex(*tbl.shape):
        tbl[idx] = weight(idx)
    mv = edge_table_sum(g, q, [tbl] * g.num_vertices, max_terms=max_terms)
    value = q ** (-g.num_edges) * 2**g.num_vertices * mv.value
    n = round(value.real)
    if abs(value - n) > tol * max(1.0, abs(n)):
        raise ConsistencyError(f"edge-model flow count {value} is not integral")
    return n


def spectral_split(gmat: np.ndarray, threshold: float = 1e-9) -> np.ndarray:
    """Factor a symmetric real matrix as g = h h^T with h = V sqrt(Lambda).

    Columns are ordered by descending eigenvalue with each eigenvector's
    largest-magnitude entry made positive, and eigenvalues within
    threshold * ||g|| of zero give all-zero columns, so the number of
    nonzero columns equals the numerical rank.
    """
    gmat = np.asarray(gmat, dtype=float)
    if gmat.ndim != 2 or gmat.shape[0] != gmat.shape[1]:
        raise ValueError("need a square matrix")
    if not np.allclose(gmat, gmat.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    vals, vecs = np.linalg.eigh(gmat)
    order = np.argsort(vals)[::-1]
    vals, vecs = vals[order], vecs[:, order]
    scale = max(np.max(np.abs(vals)), 1e-300)
    h = np.zeros(gmat.shape, dtype=np.complex128)
    for c in range(gmat.shape[0]):
        if abs(vals[c]) <= threshold * scale:
            continue
        v = vecs[:, c]
        pivot = np.argmax(np.abs(v))
        if v[pivot] < 0:
            v = -v
        h[:, c] = v * np.sqrt(complex(vals[c]))
    return h


def spectral_edge_model(
    g: Multigraph,
    group_or_q,
    fvec,
    gmat: np.ndarray,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> ModelValue:
    """Edge-colouring form of a symmetric real vertex model:
    sum_y prod_v sum_a f(a) prod over half-edges h(a, y_e)."""
    q = group_or_q if isinstance(group_or_q, int) else group_or_q.q
    fvec = np.asarray(list(fvec), dtype=np.complex128)
    h = spectral_split(np.asarray(gmat, dtype=float))
    tables = [
        _sum_over_shift_table(q, fvec, h, g.degree(v))
        for v in range(g.num_vertices)
    ]
    return edge_table_sum(g, q, tables, max_terms=max_terms)


@dataclass(frozen=True)
class XQParams:
    """Vertex weights s_a and edge weights t_b for the boundary generating
    function; t must be symmetric under negation for the edge model."""

    s: tuple
    t: tuple

    def symmetric(self, group: Group) -> bool:
        t = _as_weights(group, self.t)
        return bool(np.allclose(t, t[group.neg]))


def xq_evaluate(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    s_table,
    t_table,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> complex:
    """sum over vertex colourings x of prod_a s_a^(vertices coloured a)
    times prod_b t_b^(edges with coboundary b)."""
    svec = _as_weights(group, s_table)
    tvec = _as_weights(group, t_table)
    mv = tension_vertex_sum(
        g,
        group,
        orient,
        [svec] * g.num_vertices,
        [tvec] * g.num_edges,
        max_terms,
    )
    return mv.value


def xq_dual(
    g: Multigraph,
    group: Group,
    orient: Orientation,
    s_table,
    t_table,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> complex:
    """Expansion of the same generating function over edge colourings with
    vertex weights depending only on the boundary:
    q^(-|E|) sum_y prod_a shat_a^(vertices with boundary a) prod_b
    that_b^(edges coloured b), where shat_a = sum_c conj(chi)(ca) s_c and
    that_b = sum_c chi(cb) t_c."""
    svec = _as_weights(group, s_table)
    tvec = _as_weights(group, t_table)
    chimat = group.chi[group.mul]
    shat = chimat.conj() @ svec
    that = chimat @ tvec
    mv = boundary_edge_sum(
        g, group, orient, [shat] * g.num_vertices, [that] * g.num_edges, max_terms
    )
    return group.q ** (-g.num_edges) * mv.value


def principal_specialization(
    g: Multigraph,
    orient: Orientation,
    q: int,
    s,
    t,
    max_terms: int = DEFAULT_MAX_TERMS,
    root_tol: float = 1e-9,
) -> complex:
    """Boundary expansion of the order-q principal specialization
    (vertex weights 1, s, ..., s^(q-1); edge weight t on coboundary 0).

    Away from s^q = 1 every edge colouring contributes through a vertex
    factor (s^q - 1)/(s exp(2 pi i (dy)_v / q) - 1); at s = exp(-2 pi i c/q)
    only colourings whose boundary is c at every vertex survive.
    """
    group = cyclic_group(q)
    evec = np.full(q, t - 1, dtype=np.complex128)
    evec[0] = t - 1 + q
    edge_vecs = [evec] * g.num_edges
    if abs(s**q - 1) < root_tol:
        c = round(-q * cmath.phase(complex(s)) / (2 * math.pi)) % q
        vvec = np.zeros(q, dtype=np.complex128)
        vvec[c] = 1.0
        mv = boundary_edge_sum(
            g, group, orient, [vvec] * g.num_vertices, edge_vecs, max_terms
        )
        return q ** (g.num_vertices - g.num_edges) * mv.value
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    vvec = (s**q - 1) / (s * roots - 1)
    mv = boundary_edge_sum(
        g, group, orient, [vvec] * g.num_vertices, edge_vecs, max_terms
    )
    return q ** (-g.num_edges) * mv.value


def symmetric_weight_root(group: Group, t_table, tol: float = 1e-9) -> np.ndarray:
    """The weight u with t = u * u^N (convolution), extracted by taking the
    principal square root in the Fourier domain; raises if the claimed
    factorization fails to reconstruct t."""
    tvec = _as_weights(group, t_table)
    if not np.allclose(tvec, tvec[group.neg], atol=1e-12):
        raise ValueError("edge weights must satisfy t(-b) = t(b)")
    tq = QFunction(group, 1, tvec)
    uF = group.q ** (-0.25) * np.sqrt(fourier(tq).values)
    u = inverse_fourier(QFunction(group, 1, uF))
    recon = convolve(u, negate(u)).values
    resid = np.max(np.abs(recon - tvec))
    if resid > tol * max(1.0, np.max(np.abs(tvec))):
        raise ConsistencyError(f"convolution square root residual {resid}")
    return u.values


def xq_edge_model(
    g: Multigraph,
    group: Group,
    s_table,
    t_table,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> ModelValue:
    """Edge-colouring model for the boundary generating function when the
    edge weights are negation-symmetric: sum_y prod_v sum_a s_a prod_b
    u_b^(edges at v coloured a + b)."""
    svec = _as_weights(group, s_table)
    u = symmetric_weight_root(group, t_table)
    M = u[group.sub]  # M[a, c] = u(a - c); factor per half-edge is u(y_e - a)
    tables = [
        _sum_over_shift_table(group.q, svec, M.T, g.degree(v))
        for v in range(g.num_vertices)
    ]
    return edge_table_sum(g, group.q, tables, max_terms=max_terms)


def gf4_flow_identity_check(
    g: Multigraph,
    s,
    t,
    tol: float = 1e-8,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[bool, complex, complex]:
    """Compare (st)^(|E|/3) F(G;4) against the GF(4) vertex-colouring sum
    4^(-|V|) sum_x w(0)^#0 w(1)^#1 w(w)^#w w(wb)^#wb, where #a counts edges
    whose endpoint colours differ by a.  G must be 3-regular."""
    if not g.is_regular(3):
        raise ValueError("graph must be 3-regular")
    group = gf4()
    w = np.array(
        [1 + s + t, 1 - s - t, -1 - s + t, -1 + s - t], dtype=np.complex128
    )
    M = w[group.add]  # difference equals sum in characteristic 2
    mv = vertex_table_sum(g, 4, [M] * g.num_edges, max_terms=max_terms)
    rhs = 4.0 ** (-g.num_vertices) * mv.value
    lhs = (s * t) ** (g.num_edges // 3) * flow_polynomial(g, 4)
    ok = abs(lhs - rhs) <= tol * max(1.0, abs(lhs), abs(rhs))
    return ok, lhs, rhs
