"""Resistance distances and Kirchhoff indices by three independent routes.

Route 1 (float): pseudoinverse quadratic form, Omega(i,j) = (u_i - u_j)^T
L-dagger (u_i - u_j), summed or via the spectrum n * sum(1/lambda_i).
Route 2 (exact): minor quotient Omega(i,j) = det L(i,j|i,j) / det L(i|i).
Route 3 (exact): characteristic-polynomial coefficients, Kf = n |a2/a1|.

The routes share nothing past the Laplacian, so their agreement is the
working cross-check for everything downstream.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import Disconnected, NotATree, SameVertex
from .multigraph import Multigraph, is_connected
from .spectral import (
    charpoly_exact,
    determinant_exact,
    eigenvalues,
    laplacian,
    mat_minor,
    pseudoinverse_laplacian,
)

_EIG_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class KirchhoffReport:
    n: int
    kf_eigen: float
    kf_poly: Fraction
    kf_pairs: float
    method_spread: float


def _require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def _pair_indices(g: Multigraph, u: str, v: str) -> tuple[int, int]:
    i, j = g.index(u), g.index(v)
    if i == j:
        raise SameVertex(f"resistance between {u!r} and itself is undefined")
    return i, j


def resistance_pinv(g: Multigraph, u: str, v: str) -> float:
    """Effective resistance via the pseudoinverse quadratic form."""
    _require_connected(g)
    i, j = _pair_indices(g, u, v)
    lp = pseudoinverse_laplacian(laplacian(g))
    return float(lp[i, i] + lp[j, j] - 2 * lp[i, j])


def resistance_det(g: Multigraph, u: str, v: str) -> Fraction:
    """Effective resistance as the exact minor quotient det L(i,j|i,j) / det L(i|i)."""
    _require_connected(g)
    i, j = _pair_indices(g, u, v)
    L = laplacian(g)
    denom = determinant_exact(mat_minor(L, [i], [i]))
    if denom == 0:
        raise Disconnected("det L(i|i) = 0: graph is disconnected")
    numer = determinant_exact(mat_minor(L, [i, j], [i, j]))
    return numer / denom


def _nonzero_spectrum(g: Multigraph):
    vals = eigenvalues(laplacian(g))
    if len(vals) > 1 and vals[1] < _EIG_ZERO_TOL:
        raise Disconnected("second-smallest Laplacian eigenvalue is numerically zero")
    return vals


def kirchhoff_eigen(g: Multigraph) -> float:
    """Kf = n * sum of reciprocal nonzero Laplacian eigenvalues."""
    _require_connected(g)
    vals = _nonzero_spectrum(g)
    n = g.vertex_count
    return float(n * sum(1.0 / v for v in vals[1:]))


def kirchhoff_poly(g: Multigraph) -> Fraction:
    """Kf = n |a2/a1| from the exact characteristic polynomial.

    Rational Laplacians are scaled by the common denominator d to integers;
    eigenvalues of d*L are d times those of L, so Kf(d*L graph) = Kf/d and
    the result is multiplied back by d.  Everything stays exact.
    """
    _require_connected(g)
    L = laplacian(g)
    d = lcm(*(x.denominator for row in L for x in row))
    scaled = [[x * d for x in row] for row in L]
    coeffs = charpoly_exact(scaled)
    n = g.vertex_count
    if n == 1:
        return Fraction(0)
    a1, a2 = coeffs[1], coeffs[2]
    if a1 == 0:
        raise Disconnected("a1 = 0: graph is disconnected")
    return d * n * abs(Fraction(a2, a1))


def kirchhoff_pairs(g: Multigraph, method: str = "det"):
    """Kf as the literal all-pairs sum of resistance distances.

    method 'det' sums exact minor quotients (slow, most trustworthy);
    method 'pinv' sums pseudoinverse quadratic forms in float.
    """
    _require_connected(g)
    n = g.vertex_count
    if method == "pinv":
        lp = pseudoinverse_laplacian(laplacian(g))
        total = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                total += lp[i, i] + lp[j, j] - 2 * lp[i, j]
        return float(total)
    if method == "det":
        L = laplacian(g)
        denom = determinant_exact(mat_minor(L, [0], [0]))
        if denom == 0:
            raise Disconnected("det L(1|1) = 0: graph is disconnected")
        total = Fraction(0)
        for i in range(n):
            for j in range(i + 1, n):
                total += determinant_exact(mat_minor(L, [i, j], [i, j]))
        return total / denom
    raise ValueError(f"unknown method {method!r}")


def kirchhoff_tree(g: Multigraph) -> Fraction:
    """Kf of a tree: sum over edges of r_k * (side size) * (other side size).

    Each edge e of a tree is on the unique path between exactly
    k*(n-k) vertex pairs, where k counts the vertices on one side of the
    cut at e; resistance along a tree path is plain series addition.
    """
    _require_connected(g)
    n = g.vertex_count
    if g.edge_count != n - 1:
        raise NotATree(f"{g.edge_count} edges on {n} vertices is not a tree")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for k, e in enumerate(g.edges):
        adj[e.u].append((e.v, k))
        adj[e.v].append((e.u, k))
    total = Fraction(0)
    for k, e in enumerate(g.edges):
        # size of the component containing e.u once edge k is cut
        seen = {e.u}
        queue = deque([e.u])
        while queue:
            x = queue.popleft()
            for y, ek in adj[x]:
                if ek != k and y not in seen:
                    seen.add(y)
                    queue.append(y)
        side = len(seen)
        total += e.resistance * side * (n - side)
    return total


def kirchhoff_report(g: Multigraph) -> KirchhoffReport:
    """Run all three routes and record their spread."""
    _require_connected(g)
    kf_e = kirchhoff_eigen(g)
    kf_p = kirchhoff_poly(g)
    kf_s = kirchhoff_pairs(g, "pinv")
    vals = [kf_e, float(kf_p), kf_s]
    spread = max(vals) - min(vals)
    return KirchhoffReport(
        n=g.vertex_count,
        kf_eigen=kf_e,
        kf_poly=kf_p,
        kf_pairs=kf_s,
        method_spread=spread,
    )


__all__ = [
    "KirchhoffReport",
    "resistance_pinv",
    "resistance_det",
    "kirchhoff_eigen",
    "kirchhoff_poly",
    "kirchhoff_pairs",
    "kirchhoff_tree",
    "kirchhoff_report",
]
