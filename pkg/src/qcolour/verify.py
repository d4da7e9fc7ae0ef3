"""The cross-verification battery behind the `verify` CLI subcommand.

Every identity the package implements is checked here against its
independent route (brute-force oracle, dual expansion, or closed form) and
reported as one machine-readable record per check.  Checks are grouped into
three suites; graph-dependent checks are gated by term caps and by the
structural preconditions (regularity, rotation present) of the identity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import duality, oracles, signed
from .graphio import GraphDocument
from .graphs import components
from .groups import (
    Group,
    QFunction,
    convolve,
    cyclic_group,
    fourier,
    monochrome_indicator,
    negate,
    orthogonal_submodule,
    pointwise,
    random_orthogonal,
    zero_sum_indicator,
)
from .models import (
    VertexModel,
    VertexWeights,
    orthogonal_invariance_check,
    vertex_partition,
)

__all__ = ["CheckRecord", "VerifyContext", "run_battery", "SUITES"]


@dataclass(frozen=True)
class CheckRecord:
    name: str
    anchor: str
    lhs: str
    rhs: str
    residual: float
    passed: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "anchor": self.anchor,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "residual": self.residual,
                "pass": self.passed,
            }
        )


def _fmt(x) -> str:
    if isinstance(x, complex):
        if abs(x.imag) < 1e-12:
            x = x.real
        else:
            return f"{x.real:.12g}{x.imag:+.12g}j"
    if isinstance(x, float) and x == int(x) and abs(x) < 1e15:
        return str(int(x))
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _record(name, anchor, lhs, rhs, tol) -> CheckRecord:
    la, ra = complex(lhs), complex(rhs)
    resid = abs(la - ra) / max(1.0, abs(la), abs(ra))
    return CheckRecord(name, anchor, _fmt(lhs), _fmt(rhs), resid, resid <= tol)


@dataclass
class VerifyContext:
    doc: GraphDocument
    group: Group
    tol: float
    max_terms: int
    seed: int

    @property
    def graph(self):
        return self.doc.graph

    def rng(self, salt: int = 0):
        return np.random.default_rng(self.seed * 1000003 + salt)

    def cvec(self, rng, n: int) -> np.ndarray:
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    def fits(self, radix: int, length: int, budget: int | None = None) -> bool:
        return radix**length <= min(self.max_terms, budget or self.max_terms)


# ---------------------------------------------------------------- fourier


def _check_unitarity(ctx: VerifyContext):
    out = []
    rng = ctx.rng(1)
    G = ctx.group
    for d in (1, 2):
        f = QFunction(G, d, ctx.cvec(rng, G.q**d))
        g = QFunction(G, d, ctx.cvec(rng, G.q**d))
        lhs = np.vdot(fourier(g).values, fourier(f).values)
        rhs = np.vdot(g.values, f.values)
        out.append(_record(f"fourier.unitarity.d{d}", "fourier.unitarity", lhs, rhs, ctx.tol))
    return out


def _check_involution(ctx: VerifyContext):
    out = []
    rng = ctx.rng(2)
    G = ctx.group
    f = QFunction(G, 2, ctx.cvec(rng, G.q**2))
    ff = fourier(fourier(f))
    out.append(
        _record(
            "fourier.squared-is-negation",
            "fourier.involution",
            np.max(np.abs(ff.values - negate(f).values)),
            0.0,
            ctx.tol,
        )
    )
    f4 = fourier(fourier(ff))
    out.append(
        _record(
            "fourier.fourth-power-identity",
            "fourier.involution",
            np.max(np.abs(f4.values - f.values)),
            0.0,
            ctx.tol,
        )
    )
    return out


def _check_convolution(ctx: VerifyContext):
    rng = ctx.rng(3)
    G = ctx.group
    f = QFunction(G, 1, ctx.cvec(rng, G.q))
    g = QFunction(G, 1, ctx.cvec(rng, G.q))
    lhs = fourier(pointwise(f, g)).values
    rhs = G.q ** (-0.5) * convolve(fourier(f), fourier(g)).values
    return [
        _record(
            "fourier.product-to-convolution",
            "fourier.convolution",
            np.max(np.abs(lhs - rhs)),
            0.0,
            ctx.tol,
        )
    ]


def _check_subgroup_transform(ctx: VerifyContext):
    out = []
    G = ctx.group
    # subgroup indicators transform to scaled orthogonal-submodule indicators
    for d in (1, 2):
        mono = monochrome_indicator(G, d)
        zero = zero_sum_indicator(G, d)
        lhs = fourier(mono).values
        rhs = G.q ** (1 - d / 2) * zero.values
        out.append(
            _record(
                f"fourier.monochrome-transform.d{d}",
                "fourier.monochrome-zerosum",
                np.max(np.abs(lhs - rhs)),
                0.0,
                ctx.tol,
            )
        )
        perp = orthogonal_submodule(mono)
        out.append(
            _record(
                f"fourier.orthogonal-submodule.d{d}",
                "fourier.orthogonal-submodule",
                np.max(np.abs(perp.values - zero.values)),
                0.0,
                ctx.tol,
            )
        )
    if G.flavour == "cyclic" and len(G.factors) == 1:
        q = G.q
        for div in range(1, q + 1):
            if q % div:
                continue
            P = QFunction.indicator(G, 1, [(a,) for a in range(0, q, div)])
            lhs = fourier(P).values
            perp = orthogonal_submodule(P)
            rhs = q ** (-0.5) * (q // div) * perp.values
            out.append(
                _record(
                    f"fourier.subgroup-transform.step{div}",
                    "fourier.subgroup-transform",
                    np.max(np.abs(lhs - rhs)),
                    0.0,
                    ctx.tol,
                )
            )
    return out


def _check_character_bijection(ctx: VerifyContext):
    G = ctx.group
    rows = {tuple(np.round(G.chi[G.mul[a]], 9)) for a in range(G.q)}
    return [
        _record(
            "fourier.generating-character-bijection",
            "fourier.generating-character",
            float(len(rows)),
            float(G.q),
            0,
        )
    ]


def _check_orthogonal_invariance(ctx: VerifyContext):
    out = []
    g = ctx.graph
    G = ctx.group
    if not ctx.fits(G.q, g.num_edges, 10**6):
        return out
    rng = ctx.rng(4)
    weights = VertexWeights.from_tuple_function(
        G, lambda t: complex(rng.standard_normal(), rng.standard_normal())
    )
    # freeze the random family so both sides see identical tables
    for v in range(g.num_vertices):
        weights.table(g.degree(v))
    for i in range(5):
        U = random_orthogonal(G.q, ctx.seed * 17 + i)
        ok = orthogonal_invariance_check(
            g, weights, U, tol=max(ctx.tol, 1e-8), max_terms=ctx.max_terms
        )
        out.append(
            _record(
                f"models.orthogonal-invariance.u{i}",
                "models.orthogonal-invariance",
                1.0 if ok else 0.0,
                1.0,
                0,
            )
        )
    return out


FOURIER_CHECKS = [
    _check_unitarity,
    _check_involution,
    _check_convolution,
    _check_subgroup_transform,
    _check_character_bijection,
    _check_orthogonal_invariance,
]


# ---------------------------------------------------------------- duality


def _check_hwe_tutte(ctx: VerifyContext):
    out = []
    g = ctx.graph
    q = ctx.group.q
    if not ctx.fits(q, g.num_edges, 10**6):
        return out
    flows = oracles.enumerate_flows(g, ctx.group, max_terms=ctx.max_terms)
    T = oracles.tutte(g)
    for s in (2, 3):
        lhs = oracles.hamming_weight_enum(flows, s, g.num_edges)
        rhs = (s - 1) ** (g.num_edges - T.full_rank) * T(
            Fraction(s), Fraction(s - 1 + q, s - 1)
        )
        out.append(
            _record(f"flows.hwe-vs-tutte.s{s}", "tutte.hyperbola", float(lhs), float(rhs), 0)
        )
    return out


def _check_monochrome(ctx: VerifyContext):
    out = []
    g = ctx.graph
    q = ctx.group.q
    if not ctx.fits(q, g.num_vertices, 10**6):
        return out
    tensions = oracles.enumerate_tensions(g, ctx.group, max_terms=ctx.max_terms)
    kG = components(g)
    for t in (0, 2, 3):
        lhs = q**kG * oracles.hamming_weight_enum(tensions, t, g.num_edges)
        rhs = oracles.monochrome_polynomial(g, q, t, max_terms=ctx.max_terms)
        out.append(
            _record(
                f"tensions.monochrome-polynomial.t{t}",
                "tensions.monochrome",
                float(lhs),
                float(rhs),
                0,
            )
        )
    return out


def _check_macwilliams(ctx: VerifyContext):
    out = []
    g = ctx.graph
    G = ctx.group
    if not ctx.fits(G.q, g.num_edges, 2 * 10**7) or not ctx.fits(G.q, g.num_vertices):
        return out
    flows = oracles.enumerate_flows(g, G, max_terms=ctx.max_terms)
    tensions = oracles.enumerate_tensions(g, G, max_terms=ctx.max_terms)
    rng = ctx.rng(5)
    F = G.fourier_matrix()
    for i in range(5):
        h = ctx.cvec(rng, G.q)
        lhs = oracles.complete_weight_enum(flows, h)
        rhs = (
            G.q ** (-g.num_edges / 2)
            * len(flows)
            * oracles.complete_weight_enum(tensions, F @ h)
        )
        out.append(
            _record(f"macwilliams.cwe-dual.draw{i}", "macwilliams.poisson", lhs, rhs, 1e-8)
        )
    return out


def _check_general_duality(ctx: VerifyContext):
    out = []
    g = ctx.graph
    G = ctx.group
    if not ctx.fits(G.q, g.num_edges, 2 * 10**7) or not ctx.fits(G.q, g.num_vertices):
        return out
    rng = ctx.rng(6)
    orient = ctx.doc.orientation_or_default()
    for i in range(5):
        fs = [ctx.cvec(rng, G.q) for _ in range(g.num_vertices)]
        gs = [ctx.cvec(rng, G.q) for _ in range(g.num_edges)]
        lhs, rhs = duality.general_duality_sides(
            g, G, orient, fs, gs, max_terms=ctx.max_terms
        )
        out.append(_record(f"duality.poisson.draw{i}", "duality.poisson", lhs, rhs, 1e-8))
    return out


def _check_flow_cwe_routes(ctx: VerifyContext):
    out = []
    g = ctx.graph
    G = ctx.group
    if not ctx.fits(G.q, max(g.num_edges, g.num_vertices), 10**6):
        return out
    flows = oracles.enumerate_flows(g, G, max_terms=ctx.max_terms)
    tensions = oracles.enumerate_tensions(g, G, max_terms=ctx.max_terms)
    rng = ctx.rng(7)
    for i in range(5):
        gv = ctx.cvec(rng, G.q)
        oracle = oracles.complete_weight_enum(flows, gv * gv[G.neg])
        v1 = duality.flow_cwe_vertex_model(g, G, gv, max_terms=ctx.max_terms).value
        v2 = duality.flow_cwe_edge_model(g, G, gv, max_terms=ctx.max_terms).value
        out.append(
            _record(f"flow-cwe.vertex-route.draw{i}", "flow-cwe.vertex", v1, oracle, ctx.tol)
        )
        out.append(
            _record(f"flow-cwe.edge-route.draw{i}", "flow-cwe.edge", v2, oracle, ctx.tol)
        )
        fq = QFunction(G, 1, gv)
        conv = convolve(fq, negate(fq)).values
        toracle = oracles.complete_weight_enum(tensions, conv)
        v3 = duality.tension_cwe_expectation(g, G, gv, max_terms=ctx.max_terms).value
        out.append(
            _record(
                f"tension-cwe.expectation-route.draw{i}",
                "tension-cwe.expectation",
                v3,
                toracle,
                ctx.tol,
            )
        )
    return out


def _check_tutte_edge_model(ctx: VerifyContext):
    out = []
    g = ctx.graph
    q = ctx.group.q
    if not ctx.fits(q, g.num_edges, 10**6):
        return out
    T = oracles.tutte(g)
    for s in (2, 3):
        got = duality.tutte_edge_model(g, q, s, max_terms=ctx.max_terms).value
        s2 = Fraction(s) ** 2
        want = float((s2 - 1) ** (g.num_edges - T.full_rank) * T(s2, (s2 - 1 + q) / (s2 - 1)))
        out.append(
            _record(f"tutte.edge-model.s{s}", "tutte.hyperbola-edge-model", got, want, ctx.tol)
        )
    return out


def _check_cubic_flow_model(ctx: VerifyContext):
    out = []
    g = ctx.graph
    q = ctx.group.q
    if not g.is_regular(3) or not ctx.fits(q, g.num_edges, 2 * 10**7):
        return out
    got = duality.flow_cubic_edge_model(g, q, max_terms=ctx.max_terms)
    want = oracles.flow_polynomial(g, q, max_terms=ctx.max_terms)
    out.append(_record("flow.cubic-edge-model", "flow.cubic-edge-model", got, want, 0))
    return out


def _check_gf4_identity(ctx: VerifyContext):
    out = []
    g = ctx.graph
    if not g.is_regular(3) or not ctx.fits(4, g.num_vertices, 10**7):
        return out
    for s, t in ((1, 1), (2, 3)):
        ok, lhs, rhs = duality.gf4_flow_identity_check(g, s, t, max_terms=ctx.max_terms)
        out.append(
            _record(f"flow.gf4-vertex-model.s{s}t{t}", "flow.gf4-identity", lhs, rhs, 1e-8)
        )
    return out


def _check_spectral(ctx: VerifyContext):
    out = []
    g = ctx.graph
    q = ctx.group.q
    rng = ctx.rng(8)
    worst_recon = 0.0
    rank_ok = True
    for i in range(10):
        A = rng.standard_normal((q, q))
        gm = (A + A.T) / 2
        h = duality.spectral_split(gm)
        worst_recon = max(worst_recon, float(np.max(np.abs(h @ h.T - gm))))
        nz = sum(1 for c in range(q) if np.abs(h[:, c]).max() > 0)
        num_rank = np.linalg.matrix_rank(gm, tol=1e-9 * np.linalg.norm(gm, 2))
        rank_ok = rank_ok and (nz == num_rank)
    out.append(
        _record("spectral.reconstruction", "spectral.split", worst_recon, 0.0, 1e-9)
    )
    out.append(
        _record(
            "spectral.rank-columns",
            "spectral.split",
            1.0 if rank_ok else 0.0,
            1.0,
            0,
        )
    )
    if ctx.fits(q, g.num_vertices, 10**6) and ctx.fits(q, g.num_edges, 10**6):
        A = rng.standard_normal((q, q))
        gm = (A + A.T) / 2
        fv = rng.standard_normal(q)
        G = ctx.group
        vm = VertexModel(
            G,
            QFunction(G, 1, fv.astype(complex)),
            QFunction(G, 2, gm.reshape(-1).astype(complex)),
        )
        lhs = vertex_partition(g, vm, max_terms=ctx.max_terms).value
        rhs = duality.spectral_edge_model(g, q, fv, gm, max_terms=ctx.max_terms).value
        out.append(
            _record("spectral.partition-equality", "spectral.edge-model", lhs, rhs, ctx.tol)
        )
    return out


def _check_xq(ctx: VerifyContext):
    out = []
    g = ctx.graph
    G = ctx.group
    if not ctx.fits(G.q, g.num_vertices, 10**6) or not ctx.fits(G.q, g.num_edges, 10**6):
        return out
    orient = ctx.doc.orientation_or_default()
    rng = ctx.rng(9)
    s = ctx.cvec(rng, G.q)
    t = ctx.cvec(rng, G.q)
    a = duality.xq_evaluate(g, G, orient, s, t, max_terms=ctx.max_terms)
    b = duality.xq_dual(g, G, orient, s, t, max_terms=ctx.max_terms)
    out.append(_record("xq.dual-expansion", "xq.boundary-dual", a, b, ctx.tol))
    tsym = t + t[G.neg]
    a = duality.xq_evaluate(g, G, orient, s, tsym, max_terms=ctx.max_terms)
    b = duality.xq_edge_model(g, G, s, tsym, max_terms=ctx.max_terms).value
    out.append(_record("xq.symmetric-edge-model", "xq.edge-model", a, b, ctx.tol))
    if G.flavour == "cyclic" and len(G.factors) == 1:
        q = G.q
        for s0, t0 in ((3.0, 2.0), (1.0, 3.0)):
            lhs = duality.principal_specialization(
                g, orient, q, s0, t0, max_terms=ctx.max_terms
            )
            svec = np.array([s0**a for a in range(q)], dtype=complex)
            tvec = np.ones(q, dtype=complex)
            tvec[0] = t0
            rhs = duality.xq_evaluate(g, G, orient, svec, tvec, max_terms=ctx.max_terms)
            out.append(
                _record(
                    f"xq.principal-specialization.s{s0:g}",
                    "xq.principal-specialization",
                    lhs,
                    rhs,
                    ctx.tol,
                )
            )
    return out


DUALITY_CHECKS = [
    _check_hwe_tutte,
    _check_monochrome,
    _check_macwilliams,
    _check_general_duality,
    _check_flow_cwe_routes,
    _check_tutte_edge_model,
    _check_cubic_flow_model,
    _check_gf4_identity,
    _check_spectral,
    _check_xq,
]


# ---------------------------------------------------------------- signed


def _check_character_det(ctx: VerifyContext):
    out = []
    worst = 0.0
    for q in range(1, 9):
        closed = signed.character_matrix_det(q)
        mat = np.exp(2j * np.pi * np.outer(np.arange(q), np.arange(q)) / q)
        num = np.linalg.det(mat)
        worst = max(worst, abs(closed - num) / max(1.0, abs(num)))
    out.append(_record("sign.character-matrix-det", "sign.det-closed-form", worst, 0.0, 1e-8))
    return out


def _check_parity_transforms(ctx: VerifyContext):
    out = []
    for k, q in ((2, 3), (2, 4), (3, 4), (3, 5), (4, 5)):
        G = cyclic_group(q)
        K = signed.canonical_symmetric_set(q, k)
        fF = fourier(signed.parity_function(G, k, K)).values.reshape((q,) * k)
        worst = max(
            abs(fF[b] - signed.parity_transform_closed(k, q, b))
            for b in itertools.product(range(q), repeat=k)
        )
        out.append(
            _record(
                f"sign.parity-transform.k{k}q{q}", "sign.parity-transform", worst, 0.0, 1e-9
            )
        )
    for k in (2, 3):
        q = k + 1
        G = cyclic_group(q)
        fF = fourier(
            signed.parity_function(G, k, signed.kplus1_colour_set(k))
        ).values.reshape((q,) * k)
        worst = max(
            abs(fF[b] - signed.parity_transform_kplus1(k, b))
            for b in itertools.product(range(q), repeat=k)
        )
        out.append(
            _record(
                f"sign.parity-transform-kplus1.k{k}",
                "sign.parity-transform-kplus1",
                worst,
                0.0,
                1e-9,
            )
        )
    return out


def _signed_ctx_degree(ctx: VerifyContext) -> int | None:
    degs = set(ctx.graph.degrees())
    if len(degs) != 1:
        return None
    k = degs.pop()
    return k if k >= 1 else None


def _check_zero_sum_chain(ctx: VerifyContext):
    out = []
    g = ctx.graph
    k = _signed_ctx_degree(ctx)
    if k is None or k < 2:
        return out
    rot = ctx.doc.rotation_or_default()
    G = cyclic_group(k)
    if not ctx.fits(k, g.num_edges, 2 * 10**7):
        return out
    zs = signed.zero_sum_parity_sum(g, rot, G, tuple(range(k)), max_terms=ctx.max_terms)
    mono = signed.monochrome_parity_sum(
        g, rot, G, tuple(range(k)), max_terms=ctx.max_terms
    )
    out.append(
        _record(
            "sign.zero-sum-vs-monochrome-transform",
            "sign.zero-sum-route",
            zs.value,
            signed.zero_sum_mono_sign(k, g.num_edges, g.num_vertices) * mono.value
            if (k % 2 or (g.num_vertices - g.num_edges) % 2 == 0)
            else 0.0,
            ctx.tol,
        )
    )
    proper = signed.proper_colouring_sign_sum(g, rot, k, max_terms=ctx.max_terms)
    out.append(
        _record(
            "sign.monochrome-pairing-is-proper-sum",
            "sign.proper-colourings",
            mono.value,
            float(proper),
            ctx.tol,
        )
    )
    if k <= 3 and g.num_edges <= 10:
        P = tuple(range(0, (k + 2) // 2))
        try:
            fac = signed.factorization_sign_sum(g, rot, k, P, max_terms=ctx.max_terms)
            out.append(
                _record(
                    "sign.factorization-magnitude",
                    "sign.factorization",
                    abs(fac),
                    abs(zs.value),
                    ctx.tol,
                )
            )
        except ValueError:
            pass
    return out


def _check_sine_and_kplus1(ctx: VerifyContext):
    out = []
    g = ctx.graph
    k = _signed_ctx_degree(ctx)
    if k is None or k < 2:
        return out
    rot = ctx.doc.rotation_or_default()
    if not ctx.fits(k, g.num_edges, 2 * 10**7):
        return out
    oracle = abs(signed.proper_colouring_sign_sum(g, rot, k, max_terms=ctx.max_terms))
    if k % 2:
        for q in (k, k + 1):
            if not ctx.fits(q, g.num_edges, 2 * 10**7):
                continue
            v = signed.sine_model(g, rot, q, k, max_terms=ctx.max_terms)
            out.append(
                _record(
                    f"sign.sine-model.q{q}",
                    "sign.sine-model",
                    abs(v.value),
                    float(oracle),
                    max(ctx.tol, 1e-5),
                )
            )
    if ctx.fits(k + 1, g.num_edges, 2 * 10**7):
        v = signed.kplus1_sign_sum(g, rot, k, max_terms=ctx.max_terms)
        out.append(
            _record(
                "sign.kplus1-model",
                "sign.kplus1-model",
                abs(v.value),
                float(oracle),
                ctx.tol,
            )
        )
    return out


def _check_even_odd_proper4(ctx: VerifyContext):
    out = []
    g = ctx.graph
    if not g.is_regular(3) or not ctx.doc.pfaffian_compatible:
        return out
    if not ctx.fits(4, g.num_edges, 2 * 10**7):
        return out
    rot = ctx.doc.rotation_or_default()
    got = signed.even_minus_odd_proper4(g, rot, max_terms=ctx.max_terms)
    want = (-4) ** (g.num_edges // 3) * oracles.flow_polynomial(
        g, 4, max_terms=ctx.max_terms
    )
    out.append(
        _record("sign.even-minus-odd-proper4", "sign.even-odd-proper4", got, want, 0)
    )
    return out


def _check_rotation_covariance(ctx: VerifyContext):
    out = []
    g = ctx.graph
    k = _signed_ctx_degree(ctx)
    if k is None or k < 2 or not ctx.fits(k + 1, g.num_edges, 10**6):
        return out
    rot = ctx.doc.rotation_or_default()
    v = next(v for v in range(g.num_vertices) if g.degree(v) >= 2)
    swapped = rot.swap_adjacent(v, 0)
    a = signed.kplus1_sign_sum(g, rot, k, max_terms=ctx.max_terms).value
    b = signed.kplus1_sign_sum(g, swapped, k, max_terms=ctx.max_terms).value
    out.append(
        _record(
            "sign.rotation-covariance", "sign.rotation-covariance", a, -b, ctx.tol
        )
    )
    return out


SIGNED_CHECKS = [
    _check_character_det,
    _check_parity_transforms,
    _check_zero_sum_chain,
    _check_sine_and_kplus1,
    _check_even_odd_proper4,
    _check_rotation_covariance,
]


SUITES = {
    "fourier": FOURIER_CHECKS,
    "duality": DUALITY_CHECKS,
    "signed": SIGNED_CHECKS,
}


def run_battery(
    doc: GraphDocument,
    group: Group,
    suites=("fourier", "duality", "signed"),
    tol: float = 1e-7,
    max_terms: int = 10**8,
    seed: int = 0,
) -> list[CheckRecord]:
    ctx = VerifyContext(doc, group, tol, max_terms, seed)
    records = []
    for suite in suites:
        for check in SUITES[suite]:
            records.extend(check(ctx))
    return records
