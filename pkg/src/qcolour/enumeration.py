"""Chunked exhaustive enumeration over colouring spaces.

Every partition-function evaluator reduces to a sum over radix^length
configurations of a product of table lookups.  Configurations are produced
in mixed-radix ascending order (first coordinate most significant) in
blocks, so q^|E| up to a few times 10^7 stays tractable in numpy without
materializing the whole configuration space.
"""

from __future__ import annotations

import numpy as np

__all__ = ["TermCapExceeded", "index_blocks", "boundary_chunk", "coboundary_chunk"]

DEFAULT_MAX_TERMS = 10**8
DEFAULT_BLOCK = 1 << 17


class TermCapExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"enumeration needs {estimate} terms, cap is {cap}")
        self.estimate = estimate
        self.cap = cap


def count_terms(radix: int, length: int, cap: int) -> int:
    est = radix**length
    if est > cap:
        raise TermCapExceeded(est, cap)
    return est


def index_blocks(radix: int, length: int, block: int = DEFAULT_BLOCK):
    """Yield (C, length) integer arrays covering range(radix)^length in order."""
    if length == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    if radix == 1:
        yield np.zeros((1, length), dtype=np.int64)
        return
    suffix_len = 0
    while suffix_len < length and radix ** (suffix_len + 1) <= block:
        suffix_len += 1
    suffix_len = max(suffix_len, 1)
    n_suffix = radix**suffix_len
    suffix = np.stack(
        np.unravel_index(np.arange(n_suffix), (radix,) * suffix_len), axis=1
    ).astype(np.int64)
    prefix_len = length - suffix_len
    if prefix_len == 0:
        yield suffix
        return
    for flat in range(radix**prefix_len):
        arr = np.empty((n_suffix, length), dtype=np.int64)
        prefix = np.unravel_index(flat, (radix,) * prefix_len)
        arr[:, :prefix_len] = np.asarray(prefix, dtype=np.int64)
        arr[:, prefix_len:] = suffix
        yield arr


def boundary_chunk(g, orient, group, Y: np.ndarray) -> np.ndarray:
    """Boundary vectors for a (C, |E|) chunk of edge colourings: (C, |V|)."""
    C = Y.shape[0]
    out = np.zeros((C, g.num_vertices), dtype=np.int64)
    for v in range(g.num_vertices):
        acc = out[:, v]
        for e, end in g.halfedges_at(v):
            col = Y[:, e]
            if orient.sigma(e, end) == -1:
                col = group.neg[col]
            acc = group.add[acc, col]
        out[:, v] = acc
    return out


def coboundary_chunk(g, orient, group, X: np.ndarray) -> np.ndarray:
    """Coboundary vectors for a (C, |V|) chunk of vertex colourings: (C, |E|)."""
    C = X.shape[0]
    out = np.zeros((C, g.num_edges), dtype=np.int64)
    for e in range(g.num_edges):
        if g.is_loop(e):
            continue
        out[:, e] = group.sub[X[:, orient.head(g, e)], X[:, orient.tail(g, e)]]
    return out
