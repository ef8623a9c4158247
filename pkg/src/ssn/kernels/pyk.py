"""Numpy fallback implementations of the bitset/Cayley-table kernels.

Every function mirrors one in ``ck.pyx``; inputs are an int32 Cayley table
``table[i, j] = index(e_i * e_j)``, index arrays, and boolean member masks.
Element 0 is always the identity.
"""

from __future__ import annotations

import numpy as np


def closure(table: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Boolean mask of the subgroup generated by the seed indices."""
    n = table.shape[0]
    cur = np.unique(np.append(np.asarray(seed, dtype=np.int32), np.int32(0)))
    while True:
        nxt = np.unique(table[np.ix_(cur, cur)])
        if nxt.size == cur.size:
            break
        cur = nxt
    out = np.zeros(n, dtype=bool)
    out[cur] = True
    return out


def product_set(table: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean mask of the product set {x * y : x in a, y in b}."""
    out = np.zeros(table.shape[0], dtype=bool)
    if len(a) and len(b):
        out[table[np.ix_(a, b)].ravel()] = True
    return out


def conjugate_expand(
    table: np.ndarray, inv: np.ndarray, seed: np.ndarray, conjugators: np.ndarray
) -> np.ndarray:
    """Boolean mask of {y^-1 x y : x in seed, y in conjugators}."""
    out = np.zeros(table.shape[0], dtype=bool)
    if len(seed) and len(conjugators):
        t1 = table[np.ix_(inv[conjugators], seed)]
        out[table[t1, conjugators[:, None]].ravel()] = True
    return out


def core_members(
    table: np.ndarray, inv: np.ndarray, members: np.ndarray, conjugators: np.ndarray
) -> np.ndarray:
    """Members whose every conjugate stays in the member set.

    When ``conjugators`` runs over a group containing the members, this is the
    largest normal subgroup of the conjugating group inside the member set.
    """
    idx = np.flatnonzero(members).astype(np.int32)
    if idx.size == 0 or len(conjugators) == 0:
        return members.copy()
    t1 = table[np.ix_(inv[conjugators], idx)]
    conj = table[t1, conjugators[:, None]]  # conj[y, k] = y^-1 * idx[k] * y
    keep = members[conj].all(axis=0)
    out = np.zeros(table.shape[0], dtype=bool)
    out[idx[keep]] = True
    return out
