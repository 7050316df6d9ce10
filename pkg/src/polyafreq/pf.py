"""Total positivity of Toeplitz windows and Polya frequency verdicts.

The finite PF verdict is exact through real-rootedness; bounded Toeplitz
windows with exhaustive minor checks corroborate it (total positivity of
the infinite matrix cannot be decided from a window, so the window check
is never the primary verdict).
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction

from .errors import PreconditionError
from .polynomial import NEG_INF, Poly
from .roots import roots_within

Matrix = list[list[Fraction]]


@dataclasses.dataclass(frozen=True)
class SeqWindow:
    """Finite window a_0..a_N of a sequence, zero-padded on the right and
    zero for negative indices."""

    terms: tuple[Fraction, ...]

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple(Fraction(t) for t in terms))

    @classmethod
    def from_poly(cls, f: Poly) -> "SeqWindow":
        return cls(f.coeffs)


def _terms_of(s) -> tuple[Fraction, ...]:
    if isinstance(s, SeqWindow):
        return s.terms
    if isinstance(s, Poly):
        return s.coeffs
    return tuple(Fraction(t) for t in s)


def toeplitz_window(s, size: int) -> Matrix:
    """size x size matrix M[i][j] = a_{i-j} with zero padding."""
    terms = _terms_of(s)
    zero = Fraction(0)

    def entry(i, j):
        k = i - j
        return terms[k] if 0 <= k < len(terms) else zero

    return [[entry(i, j) for j in range(size)] for i in range(size)]


@dataclasses.dataclass(frozen=True)
class MinorReport:
    """Verdict of an exhaustive minor check; a negative verdict carries the
    lexicographically first offending minor."""

    nonnegative: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], Fraction] | None = None


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            lead = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - lead * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# index layout of the six 2+2 column splits in a Laplace expansion along the
# first two rows of a 4x4 minor: (top pair, bottom pair, sign)
_SPLITS4 = (
    ((0, 1), (2, 3), 1),
    ((0, 2), (1, 3), -1),
    ((0, 3), (1, 2), 1),
    ((1, 2), (0, 3), 1),
    ((1, 3), (0, 2), -1),
    ((2, 3), (0, 1), 1),
)


def minors_nonneg(matrix: Matrix, order: int) -> MinorReport:
    """Exhaustively check every k x k minor, k <= order, for nonnegativity.

    Denominators are cleared first (a positive scaling, so minor signs are
    unchanged); small minors go through cached Laplace expansions and
    orders above four fall back to Bareiss elimination.  Enumeration is
    lexicographic in (k, rows, cols) and stops at the first negative minor.
    """
    n = len(matrix)
    if order > n:
        raise PreconditionError("minor order exceeds matrix dimension")
    lcm = 1
    for row in matrix:
        for a in row:
            lcm = math.lcm(lcm, Fraction(a).denominator)
    m = [[int(Fraction(a) * lcm) for a in row] for row in matrix]

    def report(rows, cols, det_int, k):
        value = Fraction(det_int, lcm ** k)
        return MinorReport(nonnegative=False, witness=(tuple(rows), tuple(cols), value))

    # k = 1
    if order >= 1:
        for i in range(n):
            for j in range(n):
                if m[i][j] < 0:
                    return report((i,), (j,), m[i][j], 1)

    pairs = list(itertools.combinations(range(n), 2))
    pair_index = {p: t for t, p in enumerate(pairs)}

    # k = 2, recording the table reused by the higher orders
    det2: list[list[int]] = []
    if order >= 2:
        for r0, r1 in pairs:
            mr0, mr1 = m[r0], m[r1]
            det2.append([mr0[c0] * mr1[c1] - mr0[c1] * mr1[c0] for c0, c1 in pairs])
        for ri, (r0, r1) in enumerate(pairs):
            row = det2[ri]
            for ci, (c0, c1) in enumerate(pairs):
                if row[ci] < 0:
                    return report((r0, r1), (c0, c1), row[ci], 2)

    # k = 3: expansion along the first row of each minor
    if order >= 3:
        triples = list(itertools.combinations(range(n), 3))
        col_parts = [
            (
                pair_index[(c1, c2)],
                pair_index[(c0, c2)],
                pair_index[(c0, c1)],
            )
            for c0, c1, c2 in triples
        ]
        for r0, r1, r2 in triples:
            top = m[r0]
            bottom = det2[pair_index[(r1, r2)]]
            for ci, (c0, c1, c2) in enumerate(triples):
                p12, p02, p01 = col_parts[ci]
                d = top[c0] * bottom[p12] - top[c1] * bottom[p02] + top[c2] * bottom[p01]
                if d < 0:
                    return report((r0, r1, r2), (c0, c1, c2), d, 3)

    # k = 4: Laplace along the first two rows, six products of cached 2x2s
    if order >= 4:
        quads = list(itertools.combinations(range(n), 4))
        col_splits = []
        for quad in quads:
            col_splits.append(
                tuple(
                    (pair_index[(quad[a], quad[b])], pair_index[(quad[c], quad[d])], sg)
                    for (a, b), (c, d), sg in _SPLITS4
                )
            )
        for quad_r in quads:
            r0, r1, r2, r3 = quad_r
            top = det2[pair_index[(r0, r1)]]
            bottom = det2[pair_index[(r2, r3)]]
            for ci, quad_c in enumerate(quads):
                d = 0
                for ti, bi, sg in col_splits[ci]:
                    d += sg * top[ti] * bottom[bi]
                if d < 0:
                    return report(quad_r, quad_c, d, 4)

    # k >= 5: generic fraction-free elimination
    for k in range(5, order + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                d = bareiss_determinant([[m[i][j] for j in cols] for i in rows])
                if d < 0:
                    return report(rows, cols, d, k)

    return MinorReport(nonnegative=True)


def pf_window_report(f, size: int | None = None, order: int = 4) -> MinorReport:
    """Minor check of the Toeplitz window of a coefficient sequence.

    Default window size is deg + 3 and default minor order 4.
    """
    terms = _terms_of(f)
    if size is None:
        size = len(terms) + 2
    return minors_nonneg(toeplitz_window(terms, size), min(order, size))


# -- sequence-level verdicts --------------------------------------------------------


def is_pf_finite(f: Poly) -> bool:
    """Exact finite-PF verdict: nonnegative coefficients and a generating
    polynomial with only real nonpositive roots.  The zero sequence is PF."""
    if f.is_zero:
        return True
    if any(c < 0 for c in f.coeffs):
        return False
    return roots_within(f, NEG_INF, 0)


def is_log_concave(s) -> bool:
    terms = _terms_of(s)
    return all(
        terms[i] * terms[i] >= terms[i - 1] * terms[i + 1]
        for i in range(1, len(terms) - 1)
    )


def is_unimodal(s) -> bool:
    terms = _terms_of(s)
    i = 0
    while i + 1 < len(terms) and terms[i] <= terms[i + 1]:
        i += 1
    while i + 1 < len(terms) and terms[i] >= terms[i + 1]:
        i += 1
    return i == len(terms) - 1


def has_internal_zeros(s) -> bool:
    terms = _terms_of(s)
    support = [i for i, t in enumerate(terms) if t != 0]
    if len(support) < 2:
        return False
    return any(terms[i] == 0 for i in range(support[0] + 1, support[-1]))
