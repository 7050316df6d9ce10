"""Exact real-root analysis via Sturm sequences and interval bisection.

Root counting works on the square-free part, so counts are of *distinct*
roots; multiplicities come from the Yun decomposition.  All interval
bisection uses the half-open convention (lo, hi], which makes counts
additive under splitting; closed-interval questions test endpoints by
exact evaluation.
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction

from .errors import (
    InternalCheckError,
    NotRealRootedError,
    PreconditionError,
    ZeroPolynomialError,
)
from .polynomial import (
    ExtendedRational,
    NEG_INF,
    POS_INF,
    Poly,
    binom,
    monic,
    poly_gcd,
    primitive_part,
    root_multiplicity,
    squarefree_decomposition,
    squarefree_part,
    _Extreme,
)

_REFINE_CAP = 100_000


# -- Sturm chains ------------------------------------------------------------


def sturm_chain(f: Poly) -> list[Poly]:
    """Canonical Sturm chain of f, with positive integer-primitive rescaling."""
    chain = [primitive_part(f)]
    d = f.derivative()
    if not d.is_zero:
        chain.append(primitive_part(d))
        while True:
            r = chain[-2] % chain[-1]
            if r.is_zero:
                break
            chain.append(primitive_part(-r))
    return chain


def _variations(chain: list[Poly], x0: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x0)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _chain_count(chain: list[Poly], lo: Fraction, hi: Fraction) -> int:
    return _variations(chain, lo) - _variations(chain, hi)


def cauchy_root_bound(f: Poly) -> Fraction:
    """B with every real root of f strictly inside (-B, B)."""
    if f.is_zero:
        raise ZeroPolynomialError("root bound of zero polynomial")
    if len(f.coeffs) == 1:
        return Fraction(1)
    lead = abs(f.coeffs[-1])
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lead


def sturm_count(f: Poly, lo, hi) -> int:
    """Number of distinct real roots of f in the half-open interval (lo, hi]."""
    if f.is_zero:
        raise ZeroPolynomialError("Sturm count of zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise PreconditionError("sturm_count needs lo < hi")
    if len(f.coeffs) <= 1:
        return 0
    chain = sturm_chain(squarefree_part(f))
    return _chain_count(chain, lo, hi)


def count_distinct_real_roots(f: Poly) -> int:
    if f.is_zero:
        raise ZeroPolynomialError("root count of zero polynomial")
    if len(f.coeffs) <= 1:
        return 0
    sf = squarefree_part(f)
    B = cauchy_root_bound(sf)
    chain = sturm_chain(sf)
    return _chain_count(chain, -B, B)


def count_real_roots_with_multiplicity(f: Poly) -> int:
    if f.is_zero:
        raise ZeroPolynomialError("root count of zero polynomial")
    return sum(m * count_distinct_real_roots(g) for g, m in squarefree_decomposition(f))


def is_real_rooted(f: Poly) -> bool:
    """All complex roots real; constants count as real-rooted."""
    if f.is_zero:
        raise ZeroPolynomialError("real-rootedness of zero polynomial")
    return count_real_roots_with_multiplicity(f) == len(f.coeffs) - 1


def is_simple_rooted(f: Poly) -> bool:
    """All roots real and pairwise distinct."""
    return is_real_rooted(f) and poly_gcd(f, f.derivative()).degree <= 0


def roots_within(f: Poly, lo: ExtendedRational, hi: ExtendedRational) -> bool:
    """True iff f is real-rooted and every root lies in the closed [lo, hi].

    Either endpoint may be NEG_INF / POS_INF.
    """
    if f.is_zero:
        raise ZeroPolynomialError("roots_within of zero polynomial")
    if isinstance(lo, _Extreme) and lo == POS_INF:
        raise PreconditionError("lo endpoint may not be +inf")
    if isinstance(hi, _Extreme) and hi == NEG_INF:
        raise PreconditionError("hi endpoint may not be -inf")
    if not isinstance(lo, _Extreme) and not isinstance(hi, _Extreme):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise PreconditionError("roots_within needs lo <= hi")
    if not is_real_rooted(f):
        return False
    deg = len(f.coeffs) - 1
    if deg == 0:
        return True
    if not isinstance(lo, _Extreme) and not isinstance(hi, _Extreme) and lo == hi:
        return root_multiplicity(f, lo) == deg
    sf = squarefree_part(f)
    B = cauchy_root_bound(sf)
    chain = sturm_chain(sf)
    total = _chain_count(chain, -B, B)
    left = -B if isinstance(lo, _Extreme) else max(Fraction(lo), -B)
    right = B if isinstance(hi, _Extreme) else min(Fraction(hi), B)
    inside = _chain_count(chain, left, right) if left < right else 0
    if not isinstance(lo, _Extreme) and f(lo) == 0:
        inside += 1
    return inside == total


# -- isolation ---------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class RootBox:
    """Isolating interval for one distinct real root.

    The root lies in the open interval (lo, hi), or equals lo when lo == hi.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _isolate_squarefree(g: Poly, chain: list[Poly] | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint sorted (lo, hi) pairs isolating the real roots of square-free g.

    Interval endpoints are never roots of g; a rational root is returned as a
    degenerate pair (r, r).
    """
    if len(g.coeffs) <= 2:
        if len(g.coeffs) == 2:
            r = -g.coeffs[0] / g.coeffs[1]
            return [(r, r)]
        return []
    if chain is None:
        chain = sturm_chain(g)
    B = cauchy_root_bound(g)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B, _chain_count(chain, -B, B))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            if g(hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _chain_count(chain, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, cnt - left))
    out.sort()
    return out


def _halve(g: Poly, chain: list[Poly], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """One bisection step on an isolating interval for g."""
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    if g(mid) == 0:
        return mid, mid
    if _chain_count(chain, lo, mid) == 1:
        return lo, mid
    return mid, hi


def _boxes_disjoint(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    alo, ahi = a
    blo, bhi = b
    if alo == ahi and blo == bhi:
        return alo != blo
    if alo == ahi:
        return not blo < alo < bhi
    if blo == bhi:
        return not alo < blo < ahi
    return ahi <= blo or bhi <= alo


def _separate_all(entries: list[list]) -> None:
    """Refine (box, poly, chain) entries in place until boxes are pairwise disjoint."""
    for _ in range(_REFINE_CAP):
        dirty = False
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if not _boxes_disjoint(entries[i][0], entries[j][0]):
                    for e in (entries[i], entries[j]):
                        e[0] = _halve(e[1], e[2], *e[0])
                    dirty = True
        if not dirty:
            return
    raise InternalCheckError("root box separation failed to converge")


def _count_in_open(g: Poly, chain: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots of g strictly inside (lo, hi)."""
    if lo == hi:
        return 0
    n = _chain_count(chain, lo, hi)
    if g(hi) == 0:
        n -= 1
    return n


def isolate_roots(f: Poly) -> list[RootBox]:
    """Disjoint sorted isolating boxes with multiplicities for all roots of f.

    Requires f nonzero and real-rooted; the multiplicities sum to deg f.
    """
    if f.is_zero:
        raise ZeroPolynomialError("isolation of zero polynomial")
    if not is_real_rooted(f):
        raise NotRealRootedError("isolate_roots requires a real-rooted polynomial")
    entries: list[list] = []
    mults: list[int] = []
    for g, m in squarefree_decomposition(f):
        chain = sturm_chain(g)
        for box in _isolate_squarefree(g, chain):
            entries.append([box, g, chain])
            mults.append(m)
    _separate_all(entries)
    boxes = sorted(
        (RootBox(lo=e[0][0], hi=e[0][1], multiplicity=m) for e, m in zip(entries, mults)),
        key=lambda b: (b.lo, b.hi),
    )
    return boxes


def refine_root_box(f: Poly, box: RootBox, width) -> RootBox:
    """Shrink an isolating box of f below the requested width by bisection."""
    width = Fraction(width)
    if width <= 0:
        raise PreconditionError("refinement width must be positive")
    sf = squarefree_part(f)
    chain = sturm_chain(sf)
    lo, hi = box.lo, box.hi
    for _ in range(_REFINE_CAP):
        if hi - lo <= width:
            return RootBox(lo=lo, hi=hi, multiplicity=box.multiplicity)
        lo, hi = _halve(sf, chain, lo, hi)
    raise InternalCheckError("box refinement failed to converge")


# -- interlacing and dominance ------------------------------------------------


class InterlaceRelation(enum.Enum):
    INTERLACES = "interlaces"
    INTERLACES_STRICT = "interlaces_strict"
    ALTERNATES_LEFT = "alternates_left"
    ALTERNATES_LEFT_STRICT = "alternates_left_strict"
    EQUAL_DEGREE_NONE = "equal_degree_none"
    NONE = "none"


def _expanded_positions(f: Poly, g: Poly) -> tuple[list[int], list[int], bool]:
    """Merged root order of f and g as integer positions.

    Returns (alphas, betas, coprime): the sorted positions, with multiplicity,
    of the roots of f and of g inside the merged sequence of distinct roots;
    a common root of f and g occupies one shared position.
    """
    sf, sg = squarefree_part(f), squarefree_part(g)
    c = poly_gcd(sf, sg)
    u = sf.exact_divide(c) if c.degree > 0 else sf
    v = sg.exact_divide(c) if c.degree > 0 else sg
    decomp_f = [(h, m, sturm_chain(h)) for h, m in squarefree_decomposition(f)]
    decomp_g = [(h, m, sturm_chain(h)) for h, m in squarefree_decomposition(g)]

    entries: list[list] = []
    tags: list[str] = []
    for p, tag in ((u, "f"), (v, "g"), (c, "fg")):
        if p.degree > 0:
            chain = sturm_chain(p)
            for box in _isolate_squarefree(p, chain):
                entries.append([box, p, chain])
                tags.append(tag)
    _separate_all(entries)
    merged = sorted(zip(entries, tags), key=lambda t: t[0][0])

    def mult_in(decomp, box) -> int:
        lo, hi = box
        for h, m, chain in decomp:
            if lo == hi:
                if h(lo) == 0:
                    return m
            elif _count_in_open(h, chain, lo, hi):
                return m
        raise InternalCheckError("isolated root not found in its own factorization")

    alphas: list[int] = []
    betas: list[int] = []
    for pos, (entry, tag) in enumerate(merged):
        if "f" in tag:
            alphas.extend([pos] * mult_in(decomp_f, entry[0]))
        if "g" in tag:
            betas.extend([pos] * mult_in(decomp_g, entry[0]))
    return alphas, betas, c.degree <= 0


def interlace_relation(f: Poly, g: Poly) -> InterlaceRelation:
    """Classify the ordered pair (f, g) by the weave of their root multisets.

    interlaces: deg g = deg f + 1 with beta_1 <= alpha_1 <= beta_2 <= ...;
    alternates_left: equal degrees with alpha_1 <= beta_1 <= alpha_2 <= ...;
    the strict variants additionally require gcd(f, g) constant.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("interlace relation needs nonzero polynomials")
    if not is_real_rooted(f) or not is_real_rooted(g):
        raise NotRealRootedError("interlace relation needs real-rooted polynomials")
    alphas, betas, coprime = _expanded_positions(f, g)
    i, j = len(alphas), len(betas)
    if j == i + 1:
        ok = all(betas[k] <= alphas[k] <= betas[k + 1] for k in range(i))
        if ok:
            return InterlaceRelation.INTERLACES_STRICT if coprime else InterlaceRelation.INTERLACES
        return InterlaceRelation.NONE
    if i == j:
        ok = all(alphas[k] <= betas[k] for k in range(i)) and all(
            betas[k] <= alphas[k + 1] for k in range(i - 1)
        )
        if ok:
            return InterlaceRelation.ALTERNATES_LEFT_STRICT if coprime else InterlaceRelation.ALTERNATES_LEFT
        return InterlaceRelation.EQUAL_DEGREE_NONE
    return InterlaceRelation.NONE


def alternates(f: Poly, g: Poly, strict: bool = False) -> bool:
    """True when one of f, g interlaces or alternates left of the other."""
    ok = {InterlaceRelation.INTERLACES_STRICT, InterlaceRelation.ALTERNATES_LEFT_STRICT}
    if not strict:
        ok |= {InterlaceRelation.INTERLACES, InterlaceRelation.ALTERNATES_LEFT}
    return interlace_relation(f, g) in ok or interlace_relation(g, f) in ok


def root_dominance(f: Poly, g: Poly) -> bool:
    """True iff the i-th smallest roots satisfy alpha_i <= beta_i for all i.

    Both inputs must be standard, real-rooted and of equal degree.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("root dominance needs nonzero polynomials")
    if f.degree != g.degree:
        raise PreconditionError("root dominance needs equal degrees")
    if not (f.is_standard and g.is_standard):
        raise PreconditionError("root dominance needs positive leading coefficients")
    if not is_real_rooted(f) or not is_real_rooted(g):
        raise NotRealRootedError("root dominance needs real-rooted polynomials")
    alphas, betas, _ = _expanded_positions(f, g)
    return all(a <= b for a, b in zip(alphas, betas))


# -- global sign questions -----------------------------------------------------


def check_nonneg_on_reals(p: Poly) -> bool:
    """True iff p(x) >= 0 for every real x."""
    if p.is_zero:
        raise ZeroPolynomialError("sign check of zero polynomial")
    deg = len(p.coeffs) - 1
    if deg == 0:
        return p.coeffs[0] > 0
    if deg % 2 == 1 or p.leading < 0:
        return False
    return all(
        count_distinct_real_roots(g) == 0
        for g, m in squarefree_decomposition(p)
        if m % 2 == 1
    )


def sample_points_between_roots(p: Poly) -> list[Fraction]:
    """Rational sample points hitting every maximal root-free interval of p."""
    if p.is_zero:
        raise ZeroPolynomialError("sampling of zero polynomial")
    if len(p.coeffs) == 1:
        return [Fraction(0)]
    sf = squarefree_part(p)
    chain = sturm_chain(sf)
    boxes = _isolate_squarefree(sf, chain)
    if not boxes:
        return [Fraction(0)]
    B = cauchy_root_bound(sf)
    points = [-B, B]
    for k in range(len(boxes) - 1):
        left, right = boxes[k], boxes[k + 1]
        for _ in range(_REFINE_CAP):
            if left[1] < right[0]:
                points.append((left[1] + right[0]) / 2)
                break
            if left[1] == right[0] and left[0] != left[1] and right[0] != right[1]:
                points.append(left[1])
                break
            left = _halve(sf, chain, *left)
            right = _halve(sf, chain, *right)
        else:
            raise InternalCheckError("sample point search failed to converge")
        boxes[k + 1] = right
    return points


def negative_witness(p: Poly) -> Fraction | None:
    """A rational point where p is negative, or None when p >= 0 everywhere."""
    for x in sample_points_between_roots(p):
        if p(x) < 0:
            return x
    return None


# -- coefficient inequalities ---------------------------------------------------


def newton_inequalities(f: Poly) -> bool:
    """Strict binomial-normalized log-concavity at interior support indices.

    For f = a_m x^m + ... + a_n x^n with a_m, a_n the first and last nonzero
    coefficients, checks a_i^2/C(n,i)^2 > a_{i-1}/C(n,i-1) * a_{i+1}/C(n,i+1)
    for all m < i < n; vacuously true for short supports.  The inequality can
    fail at the support boundary itself (e.g. (x+1)^2 at i
    in {m, n}), which is deliberately outside the checked range.
    """
    support = [i for i, c in enumerate(f.coeffs) if c != 0]
    if len(support) == 0:
        return True
    m, n = support[0], support[-1]
    for i in range(m + 1, n):
        lhs = f.coeffs[i] ** 2 / binom(n, i) ** 2
        rhs = (f.coeffs[i - 1] / binom(n, i - 1)) * (f.coeffs[i + 1] / binom(n, i + 1))
        if not lhs > rhs:
            return False
    return True
