"""Exact determinant engine for all-ones-coupled block tridiagonal matrices.

The central object is the 2n x 2n matrix with 2x2 diagonal blocks A_i and
couplings p_i*J2 above / q_i*J2 below the diagonal (J2 = all-ones).  Its
determinant g_n obeys a three-term recurrence in det(A_i) and the block
functional t_i = a_i + d_i - b_i - c_i; with symmetric blocks (b_i = c_i)
the whole thing factors through a scalar tridiagonal determinant.

All identities here are polynomial in the block entries, so they are
evaluated unconditionally in exact arithmetic: the nonsingularity
hypotheses live only in the derivations (Schur complements divide by
det A), never in the final formulas, and Zariski density extends each
identity to all parameter values.  Nothing in this module divides by a
det A_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSymmetricBlocks, NotYangYuForm, ParseError, SingularA
from .spectral import (
    RatMatrix,
    charpoly_exact,
    determinant_exact,
    mat_minor,
    poly_mul,
)


@dataclass(frozen=True)
class Block2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def t(self) -> Fraction:
        """The coupling functional a + d - b - c (row-sum of the signed block)."""
        return self.a + self.d - self.b - self.c

    @staticmethod
    def of(a, b, c, d) -> "Block2":
        return Block2(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


@dataclass(frozen=True)
class BlockTriSpec:
    blocks: tuple[Block2, ...]
    couplings: tuple[tuple[Fraction, Fraction], ...]  # (p_i, q_i)

    def __post_init__(self):
        if len(self.blocks) < 1:
            raise ParseError("need at least one diagonal block")
        if len(self.couplings) != len(self.blocks) - 1:
            raise ParseError(
                f"{len(self.blocks)} blocks need {len(self.blocks) - 1} couplings, "
                f"got {len(self.couplings)}"
            )

    @property
    def n(self) -> int:
        return len(self.blocks)


def expand_blocktri(spec: BlockTriSpec) -> RatMatrix:
    """Assemble the dense 2n x 2n matrix the spec describes."""
    n = spec.n
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i, blk in enumerate(spec.blocks):
        r = 2 * i
        m[r][r], m[r][r + 1] = blk.a, blk.b
        m[r + 1][r], m[r + 1][r + 1] = blk.c, blk.d
    for i, (p, q) in enumerate(spec.couplings):
        r = 2 * i
        for di in range(2):
            for dj in range(2):
                m[r + di][r + 2 + dj] = p
                m[r + 2 + di][r + dj] = q
    return m


# ---------------------------------------------------------------------------
# Schur / bordered / rank-one / all-ones lemmas

def adjugate(m: RatMatrix) -> RatMatrix:
    """Transposed cofactor matrix, exact.  adj(0x0) is 0x0; adj([[x]]) = [[1]]."""
    k = len(m)
    if k == 0:
        return []
    if k == 1:
        return [[Fraction(1)]]
    adj = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = determinant_exact(mat_minor(m, [i], [j]))
            adj[j][i] = (-1) ** (i + j) * minor
    return adj


def _solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Solve a X = b exactly by Gaussian elimination; raises SingularA."""
    k = len(a)
    w = [list(a[i]) + list(b[i]) for i in range(k)]
    cols = len(w[0])
    for c in range(k):
        piv = next((r for r in range(c, k) if w[r][c] != 0), None)
        if piv is None:
            raise SingularA("matrix A is singular")
        w[c], w[piv] = w[piv], w[c]
        inv = 1 / w[c][c]
        w[c] = [x * inv for x in w[c]]
        for r in range(k):
            if r != c and w[r][c] != 0:
                f = w[r][c]
                w[r] = [x - f * y for x, y in zip(w[r], w[c])]
    return [row[k:cols] for row in w]


def det_schur(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix) -> Fraction:
    """det [[A,B],[C,D]] = det A * det(D - C A^-1 B), A nonsingular."""
    x = _solve(a, b)  # A^-1 B
    k = len(d)
    schur = [
        [d[i][j] - sum(c[i][t] * x[t][j] for t in range(len(a))) for j in range(k)]
        for i in range(k)
    ]
    return determinant_exact(a) * determinant_exact(schur)


def _bilinear_adj(y, m: RatMatrix, x) -> Fraction:
    adj = adjugate(m)
    return sum(
        Fraction(y[i]) * adj[i][j] * Fraction(x[j])
        for i in range(len(m))
        for j in range(len(m))
    ) if m else Fraction(0)


def det_bordered(a: RatMatrix, x, y, d) -> Fraction:
    """det [[A, x],[y^T, d]] = d det A - y^T (adj A) x.  Works for singular A."""
    return Fraction(d) * determinant_exact(a) - _bilinear_adj(y, a, x)


def det_rank1_update(a: RatMatrix, x, y) -> Fraction:
    """det(A + x y^T) = det A + y^T (adj A) x."""
    return determinant_exact(a) + _bilinear_adj(y, a, x)


def det_ones_coupled(a: RatMatrix, b: RatMatrix, p, q) -> Fraction:
    """det [[A, p*J],[q*J, B]] = det A det B - p q (sum adj A)(sum adj B)."""
    sa = sum(sum(row) for row in adjugate(a))
    sb = sum(sum(row) for row in adjugate(b))
    return (
        determinant_exact(a) * determinant_exact(b)
        - Fraction(p) * Fraction(q) * sa * sb
    )


# ---------------------------------------------------------------------------
# recurrences

def det_blocktri_recurrence(spec: BlockTriSpec) -> list[Fraction]:
    """The sequence g_1..g_n of leading block determinants.

    g_1 = det A_1
    g_2 = det A_1 det A_2 - p_1 q_1 t_1 t_2
    g_n = det A_n g_{n-1} - p_{n-1} q_{n-1} t_n t_{n-1} g_{n-2}
    """
    blocks, coup = spec.blocks, spec.couplings
    g = [blocks[0].det]
    if spec.n >= 2:
        p, q = coup[0]
        g.append(blocks[0].det * blocks[1].det - p * q * blocks[0].t * blocks[1].t)
    for i in range(2, spec.n):
        p, q = coup[i - 1]
        g.append(
            blocks[i].det * g[i - 1]
            - p * q * blocks[i].t * blocks[i - 1].t * g[i - 2]
        )
    return g


def det_tridiag_recurrence(diag, sup, sub) -> list[Fraction]:
    """h_0..h_n for the scalar tridiagonal: h_k = a_k h_{k-1} - p q h_{k-2}."""
    n = len(diag)
    if len(sup) != n - 1 or len(sub) != n - 1:
        raise ParseError(f"need {n - 1} couplings for {n} diagonal entries")
    h = [Fraction(1)]
    for k in range(n):
        prev2 = h[k - 1] if k >= 1 else Fraction(0)
        coupling = Fraction(sup[k - 1]) * Fraction(sub[k - 1]) if k >= 1 else Fraction(0)
        h.append(Fraction(diag[k]) * h[k] - coupling * prev2)
    return h


def det_blocktri_symmetric(spec: BlockTriSpec):
    """Symmetric-block shortcut: g_n = htilde_n * prod(a_i - b_i).

    htilde is the scalar tridiagonal determinant with diagonal a_i + b_i and
    couplings doubled.  Requires b_i = c_i in every block.
    """
    for blk in spec.blocks:
        if blk.b != blk.c:
            raise NotSymmetricBlocks(f"block {blk} has b != c")
    diag = [blk.a + blk.b for blk in spec.blocks]
    sup = [2 * p for p, _ in spec.couplings]
    sub = [2 * q for _, q in spec.couplings]
    htilde = det_tridiag_recurrence(diag, sup, sub)
    factor = Fraction(1)
    for blk in spec.blocks:
        factor *= blk.a - blk.b
    return htilde[-1] * factor, htilde, factor


# ---------------------------------------------------------------------------
# two-block symmetric factorization det[[A,B],[B,A]] = det(A+B) det(A-B)

def factor_yangyu(m: RatMatrix):
    """Determinant and charpoly factorization of [[A,B],[B,A]].

    Returns (det, psi_product_ok) where psi_product_ok checks the exact
    polynomial identity psi_M = psi_{A+B} * psi_{A-B}; it is None when the
    entries are not all integers (the exact charpoly path needs integers).
    """
    size = len(m)
    if size == 0 or size % 2 != 0 or any(len(row) != size for row in m):
        raise NotYangYuForm("matrix must be square of even order")
    h = size // 2
    a = [row[:h] for row in m[:h]]
    b = [row[h:] for row in m[:h]]
    if [row[h:] for row in m[h:]] != a or [row[:h] for row in m[h:]] != b:
        raise NotYangYuForm("blocks do not satisfy top-left=bottom-right, "
                            "top-right=bottom-left")
    apb = [[a[i][j] + b[i][j] for j in range(h)] for i in range(h)]
    amb = [[a[i][j] - b[i][j] for j in range(h)] for i in range(h)]
    detval = determinant_exact(apb) * determinant_exact(amb)
    psi_ok = None
    if all(Fraction(x).denominator == 1 for row in m for x in row):
        psi_m = charpoly_exact(m)
        psi_ok = psi_m == poly_mul(charpoly_exact(apb), charpoly_exact(amb))
    return detval, psi_ok


def interleave_to_yangyu(m: RatMatrix) -> RatMatrix:
    """Reorder pair-interleaved indices (1,1',2,2',...) to (1,2,...,1',2',...).

    A matrix whose 2x2 pair blocks are all symmetric lands in Yang-Yu form
    [[A,B],[B,A]] under this permutation.
    """
    size = len(m)
    if size % 2 != 0:
        raise NotYangYuForm("odd order cannot be pair-interleaved")
    perm = list(range(0, size, 2)) + list(range(1, size, 2))
    return [[m[i][j] for j in perm] for i in perm]


# ---------------------------------------------------------------------------
# text format: 'block a b c d' / 'couple p q' lines

def parse_blocktri_spec(text: str) -> BlockTriSpec:
    blocks: list[Block2] = []
    couplings: list[tuple[Fraction, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "block":
            if len(parts) != 5:
                raise ParseError(f"line {lineno}: expected 'block a b c d'")
            blocks.append(Block2.of(*(Fraction(x) for x in parts[1:])))
        elif parts[0] == "couple":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'couple p q'")
            couplings.append((Fraction(parts[1]), Fraction(parts[2])))
        else:
            raise ParseError(f"line {lineno}: unknown directive {parts[0]!r}")
    return BlockTriSpec(tuple(blocks), tuple(couplings))


def format_blocktri_spec(spec: BlockTriSpec) -> str:
    lines = [f"block {b.a} {b.b} {b.c} {b.d}" for b in spec.blocks]
    lines += [f"couple {p} {q}" for p, q in spec.couplings]
    return "\n".join(lines) + "\n"
