"""
Reduced Burau representation, Alexander polynomials of braid closures and
the two classical genus bounds used alongside the Dehornoy floor.

Matrices act on row vectors: row k of the matrix for sigma_i is the image
of basis vector e_{k+1}. For sigma_i,

    e_{i-1} -> e_{i-1} + t e_i,   e_i -> -t e_i,   e_{i+1} -> e_i + e_{i+1}

and every other basis vector is fixed.
"""

from __future__ import annotations

from .braid import BraidError, BraidWord, closure_components, free_reduce
from .laurent import ONE, T, ZERO, InexactDivisionError, LaurentPoly, PolyMatrix, poly_det

T_INV = LaurentPoly.monomial(1, -1)


class NotAKnotError(BraidError):
    pass


class GenusParityError(ArithmeticError):
    pass


def _require_knot(w: BraidWord) -> None:
    c = closure_components(w)
    if c != 1:
        raise NotAKnotError(f"closure of {w} has {c} components, not a knot")


def reduced_burau(index: int, sign: int, n: int) -> PolyMatrix:
    if not 1 <= index <= n - 1:
        raise BraidError(f"sigma_{index} is not a generator of B_{n}")
    d = n - 1
    rows = [[ONE if r == c else ZERO for c in range(d)] for r in range(d)]
    i = index - 1
    if sign > 0:
        rows[i][i] = -T
        if i > 0:
            rows[i - 1][i] = T
        if i < d - 1:
            rows[i + 1][i] = ONE
    else:
        rows[i][i] = -T_INV
        if i > 0:
            rows[i - 1][i] = ONE
        if i < d - 1:
            rows[i + 1][i] = T_INV
    return PolyMatrix(rows)


def burau_matrix(w: BraidWord) -> PolyMatrix:
    """Product of the letter matrices, left to right.

    Each letter matrix differs from the identity only in column i, so the
    product is accumulated one column update at a time.
    """
    d = w.strands - 1
    cols = [[ONE if r == c else ZERO for r in range(d)] for c in range(d)]
    neg_t, neg_tinv = -T, -T_INV
    for g in w.letters:
        i = abs(g) - 1
        left = cols[i - 1] if i > 0 else None
        right = cols[i + 1] if i < d - 1 else None
        if g > 0:
            new = [x * neg_t for x in cols[i]]
            if left is not None:
                new = [a + b * T for a, b in zip(new, left)]
            if right is not None:
                new = [a + b for a, b in zip(new, right)]
        else:
            new = [x * neg_tinv for x in cols[i]]
            if left is not None:
                new = [a + b for a, b in zip(new, left)]
            if right is not None:
                new = [a + b * T_INV for a, b in zip(new, right)]
        cols[i] = new
    return PolyMatrix(list(zip(*cols)))


def alexander_polynomial(w: BraidWord) -> LaurentPoly:
    """Normalised Alexander polynomial of a knot closure.

    det(B - I) equals the Alexander polynomial times 1 + t + ... + t^(n-1)
    up to a unit; that factor is removed by multiplying with 1 - t and
    dividing exactly by 1 - t^n.
    """
    _require_knot(w)
    n = w.strands
    m = burau_matrix(w) - PolyMatrix.identity(n - 1)
    det = poly_det(m)
    try:
        quotient = (det * (ONE - T)).divexact(ONE - T**n)
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"Burau determinant of {w} is not divisible as expected") from exc
    return quotient.normalized()


def alexander_genus_lower(w: BraidWord) -> int:
    span = alexander_polynomial(w).span()
    if span % 2:
        raise GenusParityError(f"odd Alexander span {span} for knot {w}")
    return span // 2


def bennequin_chi(w: BraidWord) -> int:
    """Euler characteristic of the surface made of n disks and one band per letter."""
    return w.strands - len(free_reduce(w))


def bennequin_components(w: BraidWord) -> int:
    """Connected pieces of the Bennequin surface: disks i, i+1 are joined iff sigma_i occurs."""
    used = {abs(g) for g in free_reduce(w).letters}
    return w.strands - len(used)


def connected_chi_lower(w: BraidWord) -> int:
    """Euler characteristic of the Bennequin surface after tubing its pieces together.

    Each tube costs 2, so this bounds the maximal Euler characteristic over
    connected spanning surfaces. It equals :func:`bennequin_chi` whenever
    every generator occurs, in particular for every knot closure.
    """
    return bennequin_chi(w) - 2 * (bennequin_components(w) - 1)


def bennequin_genus_upper(w: BraidWord) -> int:
    _require_knot(w)
    twice = len(free_reduce(w)) - w.strands + 1
    if twice % 2:
        raise GenusParityError(f"odd value {twice} for 2g of knot {w}")
    return twice // 2
