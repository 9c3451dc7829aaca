"""Seeded verification sweeps: lemmas, recurrences, closed forms.

Each suite returns (name, passed, detail) triples.  All randomness is
drawn from a caller-supplied seed so failures reproduce; the CLI echoes
the seed back in its report.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import blocktridiag as bt
from . import families
from .multigraph import Multigraph, build_multigraph, is_connected
from .resistance import kirchhoff_eigen, kirchhoff_poly
from .spectral import charpoly_exact, determinant_exact, laplacian


def _rand_int_matrix(rng, k, lo=-9, hi=9):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(k)] for _ in range(k)]


def _rand_blockspec(rng, n, nonsingular=False) -> bt.BlockTriSpec:
    blocks = []
    while len(blocks) < n:
        blk = bt.Block2.of(*(rng.randint(-9, 9) for _ in range(4)))
        if nonsingular and blk.det == 0:
            continue
        blocks.append(blk)
    coup = tuple(
        (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        for _ in range(n - 1)
    )
    return bt.BlockTriSpec(tuple(blocks), coup)


def random_connected_multigraph(rng, max_order=10, max_parallel=3) -> Multigraph:
    """A connected multigraph with dyadic resistances, for consensus tests."""
    n = rng.randint(2, max_order)
    labels = [f"v{k}" for k in range(n)]
    triples = []
    # random spanning tree first, then extra (possibly parallel) edges
    for k in range(1, n):
        j = rng.randint(0, k - 1)
        triples.append((labels[j], labels[k], Fraction(1, 2 ** rng.randint(0, 3))))
    for _ in range(rng.randint(0, 2 * n)):
        a, b = rng.sample(range(n), 2)
        existing = sum(
            1 for u, v, _ in triples if {u, v} == {labels[a], labels[b]}
        )
        if existing >= max_parallel:
            continue
        triples.append((labels[a], labels[b], Fraction(1, 2 ** rng.randint(0, 3))))
    g = build_multigraph(labels, triples)
    assert is_connected(g)
    return g


def _check(name, ok, detail=""):
    return (name, bool(ok), detail)


def suite_lemmas(seed: int):
    """Schur / bordered / rank-one / all-ones-coupled identities vs Bareiss."""
    rng = random.Random(seed)
    results = []

    ok = True
    for _ in range(100):
        k = rng.randint(2, 4)
        sz = rng.randint(1, 3)
        while True:
            a = _rand_int_matrix(rng, k)
            if determinant_exact(a) != 0:
                break
        b = [[Fraction(rng.randint(-9, 9)) for _ in range(sz)] for _ in range(k)]
        c = [[Fraction(rng.randint(-9, 9)) for _ in range(k)] for _ in range(sz)]
        d = _rand_int_matrix(rng, sz)
        full = [a[i] + b[i] for i in range(k)] + [c[i] + d[i] for i in range(sz)]
        if bt.det_schur(a, b, c, d) != determinant_exact(full):
            ok = False
    results.append(_check("lemma/schur-complement x100", ok))

    ok = True
    for _ in range(100):
        k = rng.randint(1, 4)
        a = _rand_int_matrix(rng, k)
        x = [Fraction(rng.randint(-9, 9)) for _ in range(k)]
        y = [Fraction(rng.randint(-9, 9)) for _ in range(k)]
        d = Fraction(rng.randint(-9, 9))
        full = [a[i] + [x[i]] for i in range(k)] + [list(y) + [d]]
        if bt.det_bordered(a, x, y, d) != determinant_exact(full):
            ok = False
    results.append(_check("lemma/bordered-determinant x100", ok))

    ok = True
    for _ in range(100):
        k = rng.randint(1, 4)
        a = _rand_int_matrix(rng, k)
        x = [Fraction(rng.randint(-5, 5)) for _ in range(k)]
        y = [Fraction(rng.randint(-5, 5)) for _ in range(k)]
        upd = [[a[i][j] + x[i] * y[j] for j in range(k)] for i in range(k)]
        if bt.det_rank1_update(a, x, y) != determinant_exact(upd):
            ok = False
    results.append(_check("lemma/rank-one-update x100", ok))

    ok = True
    for _ in range(100):
        ka, kb = rng.randint(1, 3), rng.randint(1, 3)
        a = _rand_int_matrix(rng, ka)
        b = _rand_int_matrix(rng, kb)
        p, q = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        full = [a[i] + [p] * kb for i in range(ka)] + [
            [q] * ka + b[i] for i in range(kb)
        ]
        if bt.det_ones_coupled(a, b, p, q) != determinant_exact(full):
            ok = False
    results.append(_check("lemma/all-ones-coupled x100", ok))
    return results


def suite_recurrences(seed: int):
    """Block/scalar tridiagonal recurrences and factorizations vs brute force."""
    rng = random.Random(seed)
    results = []

    ok = True
    for _ in range(200):
        spec = _rand_blockspec(rng, rng.randint(1, 6), nonsingular=True)
        g = bt.det_blocktri_recurrence(spec)
        if g[-1] != determinant_exact(bt.expand_blocktri(spec)):
            ok = False
    results.append(_check("recurrence/block-tridiagonal x200", ok))

    # the recurrence is a polynomial identity: also check with singular
    # blocks allowed, where the derivation's hypothesis fails but the
    # identity must still hold
    ok = True
    for _ in range(100):
        spec = _rand_blockspec(rng, rng.randint(1, 5), nonsingular=False)
        g = bt.det_blocktri_recurrence(spec)
        if g[-1] != determinant_exact(bt.expand_blocktri(spec)):
            ok = False
    results.append(_check("recurrence/block-tridiagonal-singular-blocks x100", ok))

    ok = True
    for _ in range(200):
        n = rng.randint(1, 6)
        diag = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        sup = [Fraction(rng.randint(-9, 9)) for _ in range(n - 1)]
        sub = [Fraction(rng.randint(-9, 9)) for _ in range(n - 1)]
        full = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            full[i][i] = diag[i]
        for i in range(n - 1):
            full[i][i + 1] = sup[i]
            full[i + 1][i] = sub[i]
        h = bt.det_tridiag_recurrence(diag, sup, sub)
        if h[-1] != determinant_exact(full):
            ok = False
    results.append(_check("recurrence/scalar-tridiagonal x200", ok))

    ok = True
    for _ in range(100):
        n = rng.randint(1, 5)
        blocks = []
        for _ in range(n):
            a, b, c, d = (rng.randint(-9, 9) for _ in range(4))
            blocks.append(bt.Block2.of(a, b, b, a))
        coup = tuple(
            (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
            for _ in range(n - 1)
        )
        spec = bt.BlockTriSpec(tuple(blocks), coup)
        g_sym, _, _ = bt.det_blocktri_symmetric(spec)
        if g_sym != bt.det_blocktri_recurrence(spec)[-1]:
            ok = False
        if g_sym != determinant_exact(bt.expand_blocktri(spec)):
            ok = False
    results.append(_check("recurrence/symmetric-block-factorization x100", ok))

    ok = True
    for _ in range(50):
        h = rng.randint(1, 6)
        a = _rand_int_matrix(rng, h)
        b = _rand_int_matrix(rng, h)
        m = [a[i] + b[i] for i in range(h)] + [b[i] + a[i] for i in range(h)]
        detval, psi_ok = bt.factor_yangyu(m)
        if detval != determinant_exact(m) or psi_ok is not True:
            ok = False
    results.append(_check("recurrence/two-block-factorization x50", ok))

    ok = True
    for n in range(1, 9):
        psi = families.psi_recurrence(n)[-1]
        direct = charpoly_exact(laplacian(families.generate(families.NESTED, n)))
        if psi != direct:
            ok = False
    results.append(_check("recurrence/nested-charpoly n=1..8", ok))

    ok = True
    for n in range(2, 7):
        L = laplacian(families.generate(families.NESTED, n))
        m = bt.interleave_to_yangyu(L)
        detval, psi_ok = bt.factor_yangyu(m)
        if psi_ok is not True:
            ok = False
        if detval != determinant_exact(L):
            ok = False
    results.append(_check("recurrence/nested-laplacian-factorizes n=2..6", ok))
    return results


def suite_closedforms(seed: int):
    """Closed-form Kirchhoff formulas vs the exact and float pipelines."""
    results = []

    ok = all(
        families.kf_nested_closed(n)
        == kirchhoff_poly(families.generate(families.NESTED, n))
        for n in range(1, 9)
    )
    results.append(_check("closedform/nested-weighted n=1..8", ok))

    ok = True
    for n in range(1, 11):
        kf = families.kf_nested_closed(n)
        num = kirchhoff_eigen(families.generate(families.NESTED, n))
        if abs(num - float(kf)) > 1e-6 * max(1.0, float(kf)):
            ok = False
    results.append(_check("closedform/nested-weighted-eigen n=1..10", ok))

    ok = all(
        families.kf_nested_unit_closed(n)
        == kirchhoff_poly(families.generate(families.NESTED_UNIT, n))
        for n in range(1, 9)
    )
    results.append(_check("closedform/nested-unit n=1..8", ok))

    ok = all(
        families.kf_fourregular_closed(m)
        == kirchhoff_poly(families.generate(families.FOURREG, m))
        for m in range(3, 9)
    )
    results.append(_check("closedform/four-regular m=3..8", ok))

    ok = True
    for fam in (families.PATH, families.CYCLE, families.COMPLETE):
        for n in range(3, 9):
            if families.kf_baseline_closed(fam, n) != kirchhoff_poly(
                families.generate(fam, n)
            ):
                ok = False
    results.append(_check("closedform/baselines-poly n=3..8", ok))

    ok = all(
        families.kf_baseline_closed(families.PATH_WEIGHTED, n)
        == kirchhoff_poly(families.generate(families.PATH_WEIGHTED, n))
        for n in range(2, 11)
    )
    results.append(_check("closedform/weighted-path n=2..10", ok))

    ok = True
    for n in range(1, 41):
        for kind in ("k_over_2k", "k2_over_2k"):
            direct = sum(
                (Fraction(k if kind == "k_over_2k" else k * k, 2 ** (k - 1)))
                for k in range(1, n)
            )
            if families.series_partial_sums(kind, n) != direct:
                ok = False
    results.append(_check("closedform/dyadic-series n=1..40", ok))

    ok = all(
        families.asymptote_gap(n) == Fraction(2 * n + 9, 3 * 2 ** (n - 1))
        and families.asymptote_gap(n + 1) < families.asymptote_gap(n)
        for n in range(1, 30)
    )
    results.append(_check("closedform/asymptote-gap-decreasing n=1..30", ok))
    return results


SUITES = {
    "lemmas": suite_lemmas,
    "recurrences": suite_recurrences,
    "closedforms": suite_closedforms,
}


def run(suite: str, seed: int):
    if suite == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(seed))
        return out
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return SUITES[suite](seed)
