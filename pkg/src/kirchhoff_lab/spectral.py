"""Laplacians, exact characteristic polynomials, spectra, pseudoinverses.

Two scalar kinds run through this module and never mix implicitly:

* exact rationals (``Fraction``) for Laplacians, determinants and
  characteristic polynomials -- the recurrences downstream demand exactness
  (32-bit saturation is exactly how one well-known table of coefficients
  got corrupted);
* float64 (numpy) for eigenvalues and the Moore-Penrose pseudoinverse.

Polynomials are plain lists of Python ints, ascending degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import ConvergenceFailure, NonIntegerMatrix, SingularShift
from .multigraph import Multigraph

RatMatrix = list[list[Fraction]]


# ---------------------------------------------------------------------------
# exact rational matrix helpers

def identity_rat(n: int) -> RatMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_copy(m: RatMatrix) -> RatMatrix:
    return [row[:] for row in m]


def mat_minor(m: RatMatrix, drop_rows, drop_cols) -> RatMatrix:
    dr, dc = set(drop_rows), set(drop_cols)
    return [
        [x for j, x in enumerate(row) if j not in dc]
        for i, row in enumerate(m)
        if i not in dr
    ]


def to_float(m: RatMatrix) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m], dtype=float)


def laplacian(g: Multigraph) -> RatMatrix:
    """Exact weighted Laplacian: conductance degree minus conductance adjacency.

    Equals Q R^-1 Q^T for any edge orientation; parallel edges accumulate.
    Every row sums to zero exactly.
    """
    n = g.vertex_count
    L = [[Fraction(0)] * n for _ in range(n)]
    for e in g.edges:
        c = e.conductance
        L[e.u][e.u] += c
        L[e.v][e.v] += c
        L[e.u][e.v] -= c
        L[e.v][e.u] -= c
    return L


def determinant_exact(m: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination.

    Rational input is cleared to integers row by row (the determinant picks
    up the product of the row scalings, divided back out at the end), then
    eliminated with exact integer divisions only.
    """
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a: list[list[int]] = []
    for row in m:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scale *= d
        a.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def determinant_float(m) -> float:
    """LU-with-partial-pivoting determinant (float64 path)."""
    arr = m if isinstance(m, np.ndarray) else to_float(m)
    if arr.size == 0:
        return 1.0
    return float(np.linalg.det(arr))


def _as_int_matrix(m: RatMatrix) -> list[list[int]]:
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise NonIntegerMatrix(f"entry {x} is not an integer")
            r.append(x.numerator)
        out.append(r)
    return out


def charpoly_exact(m: RatMatrix) -> list[int]:
    """Exact characteristic polynomial det(lambda*I - m), ascending coefficients.

    Faddeev-LeVerrier over big integers; the division by k at each step is
    exact for integer matrices.  No floating point anywhere on this path.
    """
    a = _as_int_matrix(m)
    n = len(a)
    # descending coefficients c[0]=1 (lambda^n) .. c[n] (constant)
    c = [Fraction(1)] + [Fraction(0)] * n
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- a @ (mk + c[k-1] * I)
        for i in range(n):
            mk[i][i] += c[k - 1]
        nxt = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            ai = a[i]
            row = nxt[i]
            for t in range(n):
                ait = ai[t]
                if ait:
                    mt = mk[t]
                    for j in range(n):
                        row[j] += ait * mt[j]
        mk = nxt
        c[k] = -sum(mk[i][i] for i in range(n)) / k
    coeffs = []
    for x in reversed(c):
        assert x.denominator == 1
        coeffs.append(x.numerator)
    return coeffs


# ---------------------------------------------------------------------------
# polynomial helpers (ascending integer coefficients)

def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_sub(p: list[int], q: list[int]) -> list[int]:
    n = max(len(p), len(q))
    out = [0] * n
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return out


def poly_scale(p: list[int], s: int) -> list[int]:
    return [s * a for a in p]


def poly_eval(p: list[int], x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def poly_trim(p: list[int]) -> list[int]:
    i = len(p)
    while i > 1 and p[i - 1] == 0:
        i -= 1
    return p[:i]


def poly_divides(d: list[int], p: list[int]) -> bool:
    """Exact divisibility test over the integers (monic-friendly)."""
    d = poly_trim(d)
    rem = [Fraction(a) for a in poly_trim(p)]
    lead = Fraction(d[-1])
    while len(rem) >= len(d) and any(rem):
        q = rem[-1] / lead
        off = len(rem) - len(d)
        for i, a in enumerate(d):
            rem[off + i] -= q * a
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return not any(rem)


# ---------------------------------------------------------------------------
# float64 spectral path

def eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending float64."""
    arr = m if isinstance(m, np.ndarray) else to_float(m)
    try:
        vals = np.linalg.eigvalsh(arr)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from None
    return np.sort(vals)


def pseudoinverse_laplacian(L) -> np.ndarray:
    """Moore-Penrose inverse of a connected-graph Laplacian.

    Uses the rank-one shift identity L-dagger = (L + J/n)^-1 - J/n, exact for
    connected Laplacians.  A numerically singular shift signals disconnection.
    """
    arr = L if isinstance(L, np.ndarray) else to_float(L)
    n = arr.shape[0]
    shift = np.full((n, n), 1.0 / n)
    try:
        inv = np.linalg.inv(arr + shift)
    except np.linalg.LinAlgError:
        raise SingularShift("L + J/n is singular; the graph is disconnected") from None
    resid = np.abs((arr + shift) @ inv - np.eye(n)).max()
    if not np.isfinite(resid) or resid > 1e-6:
        raise SingularShift("L + J/n inversion failed; the graph is disconnected")
    return inv - shift
