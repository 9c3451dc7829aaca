from fractions import Fraction

import pytest

from kirchhoff_lab import charpoly_exact, kirchhoff_poly, laplacian
from kirchhoff_lab.errors import InvalidParameter
from kirchhoff_lab.families import (
    COMPLETE,
    CYCLE,
    FOURREG,
    NESTED,
    NESTED_UNIT,
    PATH,
    PATH_WEIGHTED,
    asymptote_gap,
    generate,
    kf_baseline_closed,
    kf_fourregular_closed,
    kf_nested_closed,
    kf_nested_unit_closed,
    psi_recurrence,
    series_partial_sums,
)
from kirchhoff_lab.spectral import poly_divides, poly_mul

F = Fraction


def test_generate_nested_1():
    g = generate(NESTED, 1)
    assert g.vertex_count == 2 and g.edge_count == 2
    assert laplacian(g) == [[F(2), F(-2)], [F(-2), F(2)]]


def test_generate_nested_2_display():
    L = laplacian(generate(NESTED, 2))
    assert L == [
        [F(4), F(0), F(-2), F(-2)],
        [F(0), F(4), F(-2), F(-2)],
        [F(-2), F(-2), F(8), F(-4)],
        [F(-2), F(-2), F(-4), F(8)],
    ]


def test_generate_nested_block_display_general():
    # diagonal blocks 4, 12, 24, ..., 3*2^(n-1); trailing 2x2 block
    # [[2^(n+1), -2^n], [-2^n, 2^(n+1)]]; couplings -2^i between shells
    for n in range(2, 9):
        L = laplacian(generate(NESTED, n))
        for i in range(1, n + 1):
            r = 2 * (i - 1)
            if i < n:
                expect = 4 if i == 1 else 3 * 2**i
                assert L[r][r] == L[r + 1][r + 1] == expect
                assert L[r][r + 1] == 0
            else:
                assert L[r][r] == L[r + 1][r + 1] == 2 ** (n + 1)
                assert L[r][r + 1] == -(2**n)
            if i < n:
                for di in range(2):
                    for dj in range(2):
                        assert L[r + di][r + 2 + dj] == -(2**i)


def test_generate_fourreg_regularity():
    for m in range(3, 13):
        g = generate(FOURREG, m)
        assert g.vertex_count == 2 * m
        assert g.edge_count == 4 * m
        deg = [0] * g.vertex_count
        for e in g.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        assert all(d == 4 for d in deg)


def test_generate_octahedron():
    g = generate(FOURREG, 3)
    # octahedron: every vertex adjacent to all but one other vertex
    adj = {(min(e.u, e.v), max(e.u, e.v)) for e in g.edges}
    assert len(adj) == 12
    assert kirchhoff_poly(g) == F(13, 2)


def test_generate_invalid_params():
    with pytest.raises(InvalidParameter):
        generate(FOURREG, 2)
    with pytest.raises(InvalidParameter):
        generate(CYCLE, 2)
    with pytest.raises(InvalidParameter):
        generate("moebius", 5)
    with pytest.raises(InvalidParameter):
        generate(NESTED, 0)


def test_psi_recurrence_printed_values():
    psis = psi_recurrence(3)
    assert psis[0] == [0, -4, 1]
    assert psis[1] == [0, -384, 176, -24, 1]
    assert psis[2] == [0, -110592, 69120, -15360, 1488, -64, 1]


def test_psi_recurrence_matches_direct_charpoly():
    psis = psi_recurrence(8)
    for n in range(1, 9):
        assert psis[n - 1] == charpoly_exact(laplacian(generate(NESTED, n)))


def test_psi_structure_divisibility():
    # psi_n must be divisible by (x-4) * prod_{i=2..n} (x - 3*2^i)
    psis = psi_recurrence(8)
    for n in range(2, 9):
        factor = [-4, 1]
        for i in range(2, n + 1):
            factor = poly_mul(factor, [-3 * 2**i, 1])
        assert poly_divides(factor, psis[n - 1])


def test_kf_nested_closed_values():
    assert kf_nested_closed(1) == F(1, 2)
    assert kf_nested_closed(3) == F(15, 4)
    assert kf_nested_closed(4) == F(145, 24)


def test_kf_nested_closed_matches_pipeline():
    for n in range(1, 9):
        assert kf_nested_closed(n) == kirchhoff_poly(generate(NESTED, n))


def test_kf_nested_unit_closed():
    assert kf_nested_unit_closed(1) == F(1, 2)
    assert kf_nested_unit_closed(2) == F(11, 3)
    assert kf_nested_unit_closed(5) == F(205, 6)
    for n in range(1, 7):
        assert kf_nested_unit_closed(n) == kirchhoff_poly(generate(NESTED_UNIT, n))


def test_kf_fourregular_closed():
    assert kf_fourregular_closed(3) == F(13, 2)
    # K_{4,4}: spectrum {0, 4 x6, 8} gives 8*(6/4 + 1/8) = 13
    assert kf_fourregular_closed(4) == 13
    assert kf_fourregular_closed(6) == F(71, 2)
    assert kf_fourregular_closed(6) == kirchhoff_poly(generate(FOURREG, 6))
    # the two printed parameterizations agree at even vertex counts
    for m in range(3, 12):
        nverts = 2 * m
        assert kf_fourregular_closed(m) == F(
            nverts**3 + 12 * nverts**2 - 4 * nverts, 96
        )


def test_kf_baseline_closed():
    assert kf_baseline_closed(PATH, 3) == 4
    assert kf_baseline_closed(PATH_WEIGHTED, 2) == 1
    assert kf_baseline_closed(CYCLE, 4) == 5
    assert kf_baseline_closed(COMPLETE, 7) == 6
    for n in range(3, 8):
        assert kf_baseline_closed(PATH, n) == kirchhoff_poly(generate(PATH, n))
        assert kf_baseline_closed(CYCLE, n) == kirchhoff_poly(generate(CYCLE, n))
        assert kf_baseline_closed(COMPLETE, n) == kirchhoff_poly(generate(COMPLETE, n))
        assert kf_baseline_closed(PATH_WEIGHTED, n) == kirchhoff_poly(
            generate(PATH_WEIGHTED, n)
        )


def test_asymptote_gap():
    assert asymptote_gap(1) == F(11, 3)
    assert asymptote_gap(2) == F(13, 6)
    assert asymptote_gap(30) == F(69, 3 * 2**29)
    assert float(asymptote_gap(30)) < 1e-7
    for n in range(1, 30):
        assert asymptote_gap(n) == F(2 * n + 9, 3 * 2 ** (n - 1))
        assert asymptote_gap(n + 1) < asymptote_gap(n)


def test_series_partial_sums():
    assert series_partial_sums("k_over_2k", 2) == 1
    assert series_partial_sums("k2_over_2k", 2) == 1
    for n in (1, 5, 10):
        direct_k = sum(F(k, 2 ** (k - 1)) for k in range(1, n))
        direct_k2 = sum(F(k * k, 2 ** (k - 1)) for k in range(1, n))
        assert series_partial_sums("k_over_2k", n) == direct_k
        assert series_partial_sums("k2_over_2k", n) == direct_k2
    with pytest.raises(InvalidParameter):
        series_partial_sums("harmonic", 3)
