"""NumPy implementations of the hot Cayley-table kernels.

The compiled backend in ``_ccore`` mirrors these signatures exactly; the
package falls back to this module when the extension is not built.  All
functions take a square ``int32`` Cayley table ``t`` with ``t[i, j]`` the
index of the product, and treat element sets as sorted index arrays.
"""

from __future__ import annotations

import numpy as np

# Chunk size for the O(n^3) associativity scan, in table entries.
_ASSOC_CHUNK = 1 << 22


def associativity_defect(table):
    """First triple (i, j, k) with (ij)k != i(jk), or None if associative."""
    n = table.shape[0]
    if n == 0:
        return None
    rows = max(1, _ASSOC_CHUNK // (n * n))
    for start in range(0, n, rows):
        block = table[start : start + rows]
        left = table[block]  # left[x, j, k] = t[t[x+start, j], k]
        right = block[:, table]  # right[x, j, k] = t[x+start, t[j, k]]
        bad = left != right
        if bad.any():
            x, j, k = np.argwhere(bad)[0]
            return (start + int(x), int(j), int(k))
    return None


def closure(table, seed):
    """Indices of the subgroup generated by ``seed``, sorted ascending.

    Closure under the product suffices: in a finite group every generated
    submonoid already contains inverses.
    """
    current = np.unique(np.asarray(list(seed), dtype=np.int32))
    if current.size == 0:
        return current
    members = np.zeros(table.shape[0], dtype=bool)
    members[current] = True
    frontier = current
    while frontier.size:
        everything = np.flatnonzero(members).astype(np.int32)
        prods = np.unique(
            np.concatenate(
                [
                    table[np.ix_(frontier, everything)].ravel(),
                    table[np.ix_(everything, frontier)].ravel(),
                ]
            )
        )
        fresh = prods[~members[prods]]
        members[fresh] = True
        frontier = fresh.astype(np.int32)
    return np.flatnonzero(members).astype(np.int32)


def is_normal(table, inverse, members):
    """True when g m g^{-1} lands in ``members`` for every g and member m."""
    mask = np.zeros(table.shape[0], dtype=bool)
    mask[members] = True
    gm = table[:, members]  # gm[g, j] = g * m_j
    conj = table[gm, inverse[:, None]]  # conj[g, j] = g * m_j * g^{-1}
    return bool(mask[conj].all())


def commutator_set(table, inverse, members):
    """Unique values of a^{-1} b^{-1} a b over pairs from ``members``."""
    m = np.asarray(members, dtype=np.int32)
    inv_half = table[np.ix_(inverse[m], inverse[m])]  # a^{-1} b^{-1}
    fwd_half = table[np.ix_(m, m)]  # a b
    return np.unique(table[inv_half, fwd_half]).astype(np.int32)
