"""
Exact Laurent polynomials in t with integer coefficients, and square
matrices over them.
"""

from __future__ import annotations

from itertools import permutations as _perms
from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """Integer Laurent polynomial, stored densely from its lowest exponent.

    ``coeffs[k]`` is the coefficient of ``t**(low + k)``. Both ends of
    ``coeffs`` are nonzero; the zero polynomial has no coefficients.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, low: int = 0, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(cs[start:end])
        self.low = low + start if self.coeffs else 0
        self._hash = None

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, (terms.get(e, 0) for e in range(lo, hi + 1)))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls(e, (c,))

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def coefficients(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def span(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no span")
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs, self.low - lo):
            out[k] += c
        for k, c in enumerate(other.coeffs, other.low - lo):
            out[k] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, (-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.low, (c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1 or self.coeffs[0] not in (1, -1):
                raise InexactDivisionError(f"{self} is not a unit")
            return LaurentPoly(self.low * k, (self.coeffs[0] ** -k,))
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly(self.low + k, self.coeffs) if self.coeffs else ZERO

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """The quotient self / other, which must exist in Z[t, t^-1]."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return ZERO
        rem = list(self.coeffs)
        div = other.coeffs
        m = len(div)
        if len(rem) < m:
            raise InexactDivisionError(f"{other} does not divide {self}")
        lead = div[-1]
        q = [0] * (len(rem) - m + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + m - 1]
            if c % lead:
                raise InexactDivisionError(f"{other} does not divide {self}")
            c //= lead
            q[k] = c
            if c:
                for j in range(m):
                    rem[k + j] -= c * div[j]
        if any(rem):
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentPoly(self.low - other.low, q)

    def __call__(self, x):
        return sum(c * x ** (self.low + k) for k, c in enumerate(self.coeffs))

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs)

    def reflect(self) -> LaurentPoly:
        """p(1/t)."""
        return LaurentPoly(-self.high, reversed(self.coeffs)) if self.coeffs else ZERO

    def normalized(self) -> LaurentPoly:
        """Unit multiple with lowest exponent 0 and positive leading coefficient."""
        if not self.coeffs:
            return ZERO
        p = LaurentPoly(0, self.coeffs)
        return -p if p.coeffs[-1] < 0 else p

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({render(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)


def _monomial_str(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "t"
    return f"t^{e}" if e > 0 else f"t^({e})"


def render(p: LaurentPoly) -> str:
    """Ascending exponents, explicit signs: ``1 - 3*t + t^2``."""
    parts = []
    for e, c in sorted(p.coefficients.items()):
        mono = _monomial_str(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


class PolyMatrix:
    """Square matrix of Laurent polynomials (row-major, immutable)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("PolyMatrix must be square with dimension >= 1")
        self.rows = rows

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __repr__(self):
        body = "; ".join(", ".join(render(x) for x in r) for r in self.rows)
        return f"PolyMatrix([{body}])"


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def poly_det(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination with exact division."""
    a = [list(r) for r in m.rows]
    d = len(a)
    sign = 1
    prev = ONE
    for p in range(d - 1):
        if not a[p][p]:
            for r in range(p + 1, d):
                if a[r][p]:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[p][p]
        for i in range(p + 1, d):
            for j in range(p + 1, d):
                a[i][j] = (a[i][j] * piv - a[i][p] * a[p][j]).divexact(prev)
        prev = piv
    out = a[d - 1][d - 1]
    return out if sign > 0 else -out


def det_cofactor(m: PolyMatrix) -> LaurentPoly:
    """Leibniz expansion; only sensible for small dimensions."""
    d = m.dim
    total = ZERO
    for perm in _perms(range(d)):
        inversions = sum(1 for i in range(d) for j in range(i + 1, d) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * m.rows[i][j]
            if not term:
                break
        total = total + (-term if inversions % 2 else term)
    return total
