"""Graph family generators and their closed-form Kirchhoff indices.

Families:

* nested       -- the weighted nested family: 2n vertices in shells
                  (v1,v1'), ..., (vn,vn'); four edges of resistance 1/2^i
                  between shells i and i+1, two parallel edges of resistance
                  1/2^(n-1) closing the innermost pair.  Kf grows linearly.
* nested-unit  -- same topology, every resistance 1 ohm; Kf is cubic in n.
* fourreg      -- the 4-regular closure: shells 1..m in a cycle, four unit
                  edges between consecutive shells (including m back to 1),
                  no intra-pair edges.  m=3 is the octahedron, m=4 is K_{4,4}.
* path-weighted-- path on n vertices, edge k of resistance 1/2^(k-1).
* path, cycle, complete -- the standard unit-resistance baselines.

The characteristic polynomials of the weighted nested family satisfy a
recurrence through the scalar sequence
    g_k = (lambda - 3*2^k) g_{k-1} - 2^(2k) g_{k-2},   g_0 = 1, g_1 = lambda - 4,
with
    psi_n = ((lambda - 2^n) g_{n-1} - 2^(2n) g_{n-2})
            * (lambda - 4) * prod_{i=2..n} (lambda - 3*2^i).
Everything is evaluated in arbitrary-precision integers; coefficients of
these polynomials blow past 32 bits by n = 5.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameter
from .multigraph import Multigraph, build_multigraph
from .spectral import poly_mul, poly_scale, poly_sub

NESTED = "nested"
NESTED_UNIT = "nested-unit"
FOURREG = "fourreg"
PATH = "path"
PATH_WEIGHTED = "path-weighted"
CYCLE = "cycle"
COMPLETE = "complete"

FAMILIES = (NESTED, NESTED_UNIT, FOURREG, PATH, PATH_WEIGHTED, CYCLE, COMPLETE)

_MIN_PARAM = {FOURREG: 3, CYCLE: 3}


def _check_param(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise InvalidParameter(f"unknown family {family!r}")
    if n < _MIN_PARAM.get(family, 1):
        raise InvalidParameter(
            f"family {family!r} needs parameter >= {_MIN_PARAM.get(family, 1)}, got {n}"
        )


def _shell_labels(m: int) -> list[str]:
    # v<k> and v<k>p keep the pair labels ASCII-safe in files
    out = []
    for k in range(1, m + 1):
        out += [f"v{k}", f"v{k}p"]
    return out


def _nested_edges(n: int, unit: bool):
    edges = []
    for i in range(1, n):
        r = 1 if unit else Fraction(1, 2**i)
        for a in (f"v{i}", f"v{i}p"):
            for b in (f"v{i + 1}", f"v{i + 1}p"):
                edges.append((a, b, r))
    r_inner = 1 if unit else Fraction(1, 2 ** (n - 1))
    edges.append((f"v{n}", f"v{n}p", r_inner))
    edges.append((f"v{n}", f"v{n}p", r_inner))
    return edges


def generate(family: str, n: int) -> Multigraph:
    """Build the requested family member as an explicit multigraph."""
    _check_param(family, n)
    if family in (NESTED, NESTED_UNIT):
        return build_multigraph(
            _shell_labels(n), _nested_edges(n, unit=family == NESTED_UNIT)
        )
    if family == FOURREG:
        m = n
        edges = []
        for i in range(1, m + 1):
            j = i % m + 1
            for a in (f"v{i}", f"v{i}p"):
                for b in (f"v{j}", f"v{j}p"):
                    edges.append((a, b, 1))
        return build_multigraph(_shell_labels(m), edges)
    labels = [f"v{k}" for k in range(1, n + 1)]
    if family == PATH:
        edges = [(f"v{k}", f"v{k + 1}", 1) for k in range(1, n)]
    elif family == PATH_WEIGHTED:
        edges = [(f"v{k}", f"v{k + 1}", Fraction(1, 2 ** (k - 1))) for k in range(1, n)]
    elif family == CYCLE:
        edges = [(f"v{k}", f"v{k % n + 1}", 1) for k in range(1, n + 1)]
    else:  # COMPLETE
        edges = [
            (f"v{i}", f"v{j}", 1)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        ]
    return build_multigraph(labels, edges)


def psi_recurrence(n_max: int) -> list[list[int]]:
    """Characteristic polynomials of the weighted nested Laplacians, n = 1..n_max.

    Returned ascending-coefficient integer lists, index 0 holding n=1.
    """
    if n_max < 1:
        raise InvalidParameter("n_max must be >= 1")
    g_prev2 = [1]        # g_0
    g_prev = [-4, 1]     # g_1 = lambda - 4
    psis = [[0, -4, 1]]  # psi_1 = lambda^2 - 4 lambda
    for n in range(2, n_max + 1):
        head = poly_sub(
            poly_mul([-(2**n), 1], g_prev), poly_scale(g_prev2, 2 ** (2 * n))
        )
        tail = [-4, 1]
        for i in range(2, n + 1):
            tail = poly_mul(tail, [-3 * 2**i, 1])
        psis.append(poly_mul(head, tail))
        g_next = poly_sub(
            poly_mul([-3 * 2**n, 1], g_prev), poly_scale(g_prev2, 2 ** (2 * n))
        )
        g_prev2, g_prev = g_prev, g_next
    return psis


def kf_nested_closed(n: int) -> Fraction:
    """Kf of the weighted nested family: 17n/6 - 6 + (2n+9)/(3*2^(n-1))."""
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    return Fraction(17 * n, 6) - 6 + Fraction(2 * n + 9, 3 * 2 ** (n - 1))


def kf_nested_unit_closed(n: int) -> Fraction:
    """Kf of the unit-resistance nested family: (n^3 + 3n^2 + n)/6 for n >= 2, 1/2 at n=1."""
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    if n == 1:
        return Fraction(1, 2)
    return Fraction(n**3 + 3 * n**2 + n, 6)


def kf_fourregular_closed(m: int) -> Fraction:
    """Kf of the 4-regular closure on 2m vertices: (m^3 + 6m^2 - m)/12."""
    if m < 3:
        raise InvalidParameter("m must be >= 3")
    return Fraction(m**3 + 6 * m**2 - m, 12)


def kf_baseline_closed(family: str, n: int) -> Fraction:
    """Closed-form Kf for the baseline families."""
    _check_param(family, n)
    if family == PATH:
        return Fraction(n**3 - n, 6)
    if family == PATH_WEIGHTED:
        # 4n - 12 + (n+3)/2^(n-2); the power goes below 1 for n < 2
        return 4 * n - 12 + (n + 3) * Fraction(2) ** (2 - n)
    if family == CYCLE:
        return Fraction(n**3 - n, 12)
    if family == COMPLETE:
        return Fraction(n - 1)
    raise InvalidParameter(f"no baseline closed form for family {family!r}")


def asymptote_gap(n: int) -> Fraction:
    """Distance of Kf(nested, n) above its asymptote 17n/6 - 6.

    Equals (2n+9)/(3*2^(n-1)) exactly; strictly positive and strictly
    decreasing, which is the asymptotic-linearity statement in exact form.
    """
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    return kf_nested_closed(n) - (Fraction(17 * n, 6) - 6)


def series_partial_sums(kind: str, n: int) -> Fraction:
    """Closed forms for the dyadic partial sums used by the path derivation.

    kind 'k_over_2k':  sum_{k=1..n-1} k   / 2^(k-1) = 4  - (n+1)/2^(n-2)
    kind 'k2_over_2k': sum_{k=1..n-1} k^2 / 2^(k-1) = 12 - (n^2+2n+3)/2^(n-2)
    """
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    pow_ = Fraction(2) ** (n - 2)
    if kind == "k_over_2k":
        return 4 - Fraction(n + 1) / pow_
    if kind == "k2_over_2k":
        return 12 - Fraction(n**2 + 2 * n + 3) / pow_
    raise InvalidParameter(f"unknown series kind {kind!r}")
