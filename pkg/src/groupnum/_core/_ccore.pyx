# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled Cayley-table kernels; mirrors the signatures in ``pycore``."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def associativity_defect(const cnp.int32_t[:, :] table):
    """First triple (i, j, k) with (ij)k != i(jk), or None if associative."""
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t i, j, k
    cdef cnp.int32_t ij
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return (i, j, k)
    return None


def closure(const cnp.int32_t[:, :] table, seed):
    """Indices of the subgroup generated by ``seed``, sorted ascending."""
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.uint8_t[:] member = np.zeros(n, dtype=np.uint8)
    cdef cnp.int32_t[:] order = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t count = 0, done = 0
    cdef cnp.int32_t g, x, p
    cdef Py_ssize_t idx
    for g in sorted(set(int(s) for s in seed)):
        if not member[g]:
            member[g] = 1
            order[count] = g
            count += 1
    while done < count:
        x = order[done]
        done += 1
        for idx in range(count):
            g = order[idx]
            p = table[x, g]
            if not member[p]:
                member[p] = 1
                order[count] = p
                count += 1
            p = table[g, x]
            if not member[p]:
                member[p] = 1
                order[count] = p
                count += 1
    result = np.asarray(order[:count]).copy()
    result.sort()
    return result


def is_normal(const cnp.int32_t[:, :] table, const cnp.int32_t[:] inverse, members):
    """True when g m g^{-1} lands in ``members`` for every g and member m."""
    cdef Py_ssize_t n = table.shape[0]
    cdef const cnp.int32_t[:] m = np.ascontiguousarray(members, dtype=np.int32)
    cdef cnp.uint8_t[:] mask = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t i, g
    for i in range(m.shape[0]):
        mask[m[i]] = 1
    for g in range(n):
        for i in range(m.shape[0]):
            if not mask[table[table[g, m[i]], inverse[g]]]:
                return False
    return True


def commutator_set(const cnp.int32_t[:, :] table, const cnp.int32_t[:] inverse, members):
    """Unique values of a^{-1} b^{-1} a b over pairs from ``members``."""
    cdef Py_ssize_t n = table.shape[0]
    cdef const cnp.int32_t[:] m = np.ascontiguousarray(members, dtype=np.int32)
    cdef cnp.uint8_t[:] seen = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t i, j
    cdef cnp.int32_t a, b, c
    for i in range(m.shape[0]):
        a = m[i]
        for j in range(m.shape[0]):
            b = m[j]
            c = table[table[inverse[a], inverse[b]], table[a, b]]
            seen[c] = 1
    return np.flatnonzero(np.asarray(seen)).astype(np.int32)
