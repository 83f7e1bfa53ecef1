"""Vectorized exact linear algebra over GF(p^e), internal.

Matrices over a single-level extension field are flattened to int64
arrays of shape (rows, cols, e) holding the polynomial-basis digits mod
p.  Field multiplication becomes contraction against a fixed reduction
tensor T with T[u, v] = digits(x^(u+v) mod modulus), so matrix products
and Gaussian elimination run as a handful of integer tensor operations
per pivot instead of per entry.  All arithmetic stays in int64 and is
reduced mod p; intermediate magnitudes are bounded by e^2 p^3 n, far
below overflow for the sizes guarded here.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .fields import Field, FieldElement


def _require_flat(field: Field):
    if field.base is not None or field.degree < 1:
        raise ValueError("digit representation needs a single-level field")


@lru_cache(maxsize=None)
def reduction_tensor(field: Field) -> np.ndarray:
    """T[u, v, :] = digits of x^(u+v) reduced by the field modulus."""
    _require_flat(field)
    e = field.degree
    if e == 1:
        return np.ones((1, 1, 1), dtype=np.int64)
    x = field.element([0, 1])
    powers = [field.one]
    for _ in range(2 * e - 2):
        powers.append(powers[-1] * x)
    t = np.zeros((e, e, e), dtype=np.int64)
    for u in range(e):
        for v in range(e):
            t[u, v, :] = powers[u + v].coeffs
    return t


@lru_cache(maxsize=None)
def frobenius_matrix(field: Field, q: int) -> np.ndarray:
    """Matrix of x -> x^q on the digit representation (a GF(p)-linear map)."""
    _require_flat(field)
    e = field.degree
    mat = np.zeros((e, e), dtype=np.int64)
    for i in range(e):
        basis = field.from_index(field.p**i) if e > 1 else field.one
        image = basis**q
        mat[:, i] = image.coeffs
    return mat


def to_digits(entries, field: Field) -> np.ndarray:
    """Flatten a sequence of rows of field elements to an int64 digit array."""
    _require_flat(field)
    data = [[el.coeffs for el in row] for row in entries]
    return np.asarray(data, dtype=np.int64)


def from_digits(arr: np.ndarray, field: Field):
    """Rows of field elements from a digit array."""
    return tuple(
        tuple(FieldElement(field, tuple(int(d) for d in cell)) for cell in row)
        for row in arr
    )


def matmul_digits(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    """Exact product of digit matrices over the field, reduced mod p."""
    t = reduction_tensor(field)
    e = field.degree
    rows, inner = a.shape[0], a.shape[1]
    cols = b.shape[1]
    if b.shape[0] != inner:
        raise ValueError("incompatible shapes")
    out = np.zeros((rows, cols, e), dtype=np.int64)
    for u in range(e):
        bu = np.tensordot(b, t[u], axes=(2, 0))      # (inner, cols, e)
        out += np.tensordot(a[:, :, u], bu, axes=(1, 0))
    return out % field.p


def conjugate_transpose_digits(a: np.ndarray, field: Field, q: int) -> np.ndarray:
    """Transpose with entry-wise q-th power, on digit arrays."""
    f = frobenius_matrix(field, q)
    return np.einsum("wu,iju->jiw", f, a) % field.p


def rank_digits(a: np.ndarray, field: Field) -> int:
    """Row rank by exact Gaussian elimination on the digit representation.

    Pivot rows are normalized with exact field inverses; rows below are
    cleared in one tensor contraction per pivot.  Deterministic: the pivot
    is always the first nonzero entry in the current column.
    """
    t = reduction_tensor(field)
    p = field.p
    a = a.copy() % p
    rows, cols = a.shape[0], a.shape[1]
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col].any(axis=1))[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        pe = FieldElement(field, tuple(int(d) for d in a[rank, col]))
        inv = np.asarray(pe.inverse().coeffs, dtype=np.int64)
        a[rank] = (a[rank] @ np.einsum("v,uvw->uw", inv, t)) % p
        below = a[rank + 1:, col]
        live = np.nonzero(below.any(axis=1))[0]
        if live.size:
            factors = a[rank + 1 + live, col]                    # (L, e)
            prow = a[rank]                                        # (cols, e)
            pt = np.einsum("jv,uvw->ujw", prow, t)                # (e, cols, e)
            out = np.tensordot(factors, pt, axes=(1, 0))          # (L, cols, e)
            a[rank + 1 + live] = (a[rank + 1 + live] - out) % p
        rank += 1
    return rank
