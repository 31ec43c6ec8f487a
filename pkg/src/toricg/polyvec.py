"""Exact integer polynomials and the f/h/gamma/toric-g pipeline.

All arithmetic is over Python's arbitrary-precision integers; rationals
appear only inside the Narayana/triangle prefactors (with integrality
asserted on output) and inside the Sturm sign computations.

The toric g-polynomial of an n-dimensional simple polytope with
gamma-vector (gamma_0, ..., gamma_{n//2}) is

    sum_j gamma_j * g_contrib(n, j),

where g_contrib(n, j) = sum_k C_{n-k-j} binom(n-k, k) (x-1)^k.  The same
polynomial also comes out of the h-vector route

    h_0 + sum_i (h_i - h_{i-1}) * cnix(n, i),

and both routes are exposed so they can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import PreconditionError, StructuralError
from .words import catalan

_FAMILIES = ("cube", "associahedron", "cyclohedron", "permutahedron")


class IntPoly:
    """Univariate polynomial with int coefficients, low degree first.

    Immutable; trailing zeros are trimmed and the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * power + [coeff])

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        text = text.strip()
        return cls(int(tok) for tok in text.split(",")) if text else cls()

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(
            [x + y for x, y in zip(a, b)] + list(a[len(b):])
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PreconditionError("negative power")
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, value):
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                base = "x" if i == 1 else f"x^{i}"
                parts.append(base if c == 1 else f"-{base}" if c == -1 else f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")


X = IntPoly((0, 1))
X_MINUS_1 = IntPoly((-1, 1))
X_PLUS_1 = IntPoly((1, 1))


# ---------------------------------------------------------------------------
# f / h / gamma transforms.
# ---------------------------------------------------------------------------


def f_to_h(fvec: Sequence[int]) -> tuple[int, ...]:
    """h-vector from the face-count vector: sum h_i x^i = sum f_i (x-1)^i."""
    poly = IntPoly()
    for i, f in enumerate(fvec):
        poly = poly + X_MINUS_1 ** i * f
    return _padded(poly, len(fvec))


def h_to_f(hvec: Sequence[int]) -> tuple[int, ...]:
    """Inverse of f_to_h: substitute x -> x + 1."""
    poly = IntPoly()
    for i, h in enumerate(hvec):
        poly = poly + X_PLUS_1 ** i * h
    return _padded(poly, len(hvec))


def _padded(poly: IntPoly, length: int) -> tuple[int, ...]:
    if len(poly.coeffs) > length:
        raise StructuralError("vector longer than its stated dimension")
    return tuple(poly.coeff(i) for i in range(length))


def is_palindromic(vec: Sequence[int]) -> bool:
    return list(vec) == list(reversed(vec))


def h_to_gamma(hvec: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of a palindromic h-polynomial in the basis
    x^j (1+x)^{n-2j}; triangular, hence unique."""
    if not hvec:
        raise PreconditionError("empty h-vector")
    if not is_palindromic(hvec):
        raise StructuralError(f"h-vector is not palindromic: {list(hvec)!r}")
    n = len(hvec) - 1
    residual = IntPoly(hvec)
    gamma = []
    for j in range(n // 2 + 1):
        g = residual.coeff(j)
        gamma.append(g)
        if g:
            residual = residual - IntPoly.monomial(j, g) * X_PLUS_1 ** (n - 2 * j)
    if residual:
        raise StructuralError(f"h-vector is not palindromic: {list(hvec)!r}")
    return tuple(gamma)


def gamma_to_h(gamma: Sequence[int], n: int) -> tuple[int, ...]:
    """h-vector of dimension n with the given gamma coordinates."""
    if len(gamma) > n // 2 + 1 and any(gamma[n // 2 + 1 :]):
        raise PreconditionError(f"gamma has entries beyond index {n // 2}")
    poly = IntPoly()
    for j, g in enumerate(gamma[: n // 2 + 1]):
        if g:
            poly = poly + IntPoly.monomial(j, g) * X_PLUS_1 ** (n - 2 * j)
    return _padded(poly, n + 1)


@dataclass(frozen=True)
class FHGVectors:
    """Consistent bundle of the face-count, h- and gamma-vectors of an
    n-dimensional simple polytope."""

    n: int
    fvec: tuple[int, ...]
    hvec: tuple[int, ...]
    gamma: tuple[int, ...]

    @classmethod
    def from_f(cls, fvec: Sequence[int]) -> "FHGVectors":
        h = f_to_h(fvec)
        return cls(len(fvec) - 1, tuple(fvec), h, h_to_gamma(h))

    @classmethod
    def from_h(cls, hvec: Sequence[int]) -> "FHGVectors":
        return cls(len(hvec) - 1, h_to_f(hvec), tuple(hvec), h_to_gamma(hvec))

    @classmethod
    def from_gamma(cls, gamma: Sequence[int], n: int) -> "FHGVectors":
        h = gamma_to_h(gamma, n)
        return cls(n, h_to_f(h), h, tuple(gamma) + (0,) * (n // 2 + 1 - len(gamma)))


# ---------------------------------------------------------------------------
# Toric g machinery.
# ---------------------------------------------------------------------------


def cnix(n: int, i: int) -> IntPoly:
    """The peak-counting triangle polynomial C(n, i, x); its x^k coefficient
    is the number of nonnegative paths with n steps from the origin to
    height n - 2i having k peaks.  C(n, 0, x) = 1."""
    if n < 0 or i < 0 or 2 * i > n:
        raise PreconditionError(f"cnix needs 0 <= i <= n/2, got ({n}, {i})")
    if i == 0:
        return IntPoly((1,))
    coeffs = [0] * (i + 1)
    for k in range(1, i + 1):
        value = Fraction(n + 1 - 2 * i, k) * comb(n - i, k - 1) * comb(i - 1, k - 1)
        if value.denominator != 1:
            raise AssertionError(f"cnix({n},{i}) coefficient x^{k} not integral")
        coeffs[k] = int(value)
    return IntPoly(coeffs)


def g_contrib(n: int, j: int) -> IntPoly:
    """The contribution of the j-th gamma entry to the toric g-polynomial:
    sum_k C_{n-k-j} binom(n-k, k) (x-1)^k; zero when j > n."""
    if n < 0 or j < 0:
        raise PreconditionError("g_contrib needs n >= 0 and j >= 0")
    if j > n:
        return IntPoly()
    out = IntPoly()
    for k in range(min(n // 2, n - j) + 1):
        out = out + X_MINUS_1 ** k * (catalan(n - k - j) * comb(n - k, k))
    return out


def toric_g_from_gamma(n: int, gamma: Sequence[int]) -> IntPoly:
    """sum_j gamma_j * g_contrib(n, j); gamma may be zero padded."""
    if len(gamma) > n // 2 + 1 and any(gamma[n // 2 + 1 :]):
        raise PreconditionError(f"gamma has entries beyond index {n // 2}")
    out = IntPoly()
    for j, g in enumerate(gamma[: n // 2 + 1]):
        if g:
            out = out + g_contrib(n, j) * g
    return out


def toric_g_from_h(n: int, hvec: Sequence[int]) -> IntPoly:
    """h-vector route: h_0 + sum_i (h_i - h_{i-1}) * cnix(n, i).

    Agrees with toric_g_from_gamma(n, h_to_gamma(hvec)) on every
    palindromic h-vector.
    """
    if len(hvec) != n + 1:
        raise PreconditionError(f"h-vector must have length {n + 1}")
    if not is_palindromic(hvec):
        raise StructuralError(f"h-vector is not palindromic: {list(hvec)!r}")
    out = IntPoly((hvec[0],))
    for i in range(1, n // 2 + 1):
        diff = hvec[i] - hvec[i - 1]
        if diff:
            out = out + cnix(n, i) * diff
    return out


def narayana(k: int) -> IntPoly:
    """Narayana polynomial (1/k) sum_j binom(k,j) binom(k,j-1) x^j for k > 0,
    with the boundary value N_0(x) = x; N_k(1) = catalan(k) for k >= 1."""
    if k < 0:
        raise PreconditionError("narayana needs k >= 0")
    if k == 0:
        return X
    coeffs = [0] * (k + 1)
    for j in range(1, k + 1):
        value = Fraction(comb(k, j) * comb(k, j - 1), k)
        if value.denominator != 1:
            raise AssertionError(f"narayana({k}) coefficient x^{j} not integral")
        coeffs[j] = int(value)
    return IntPoly(coeffs)


def peak_poly(n: int, m: int) -> IntPoly:
    """Weight enumerator of Dyck words of semilength n where each word
    contributes x^(number of UD factors inside its length-m prefix).

    Computed from the recurrence splitting off the shortest balanced
    prefix U u' D; the initial condition is the constant catalan(n) at
    m = 0.  Satisfies peak_poly(n - j, n) = g_contrib(n, j) for 2j <= n.
    """
    if n < 0 or m < 0 or m > 2 * n:
        raise PreconditionError(f"peak_poly needs 0 <= m <= 2n, got ({n}, {m})")
    return _peak(n, m)


@lru_cache(maxsize=None)
def _peak(n: int, m: int) -> IntPoly:
    if m == 0:
        return IntPoly((catalan(n),))
    out = IntPoly()
    for k in range((m - 2) // 2 + 1):
        out = out + narayana(k) * _peak(n - k - 1, m - 2 * k - 2)
    for k in range((m - 1 + 1) // 2, n):
        out = out + _peak(k, m - 1) * catalan(n - k - 1)
    return out


# ---------------------------------------------------------------------------
# Named gamma-vector families.
# ---------------------------------------------------------------------------


def gamma_family(family: str, n: int) -> tuple[int, ...]:
    """Gamma-vector of a named n-dimensional simple polytope family.

    cube            via the h-vector (binom(n, i)), exercising h_to_gamma
    associahedron   gamma_j = C_j * binom(n, 2j)
    cyclohedron     gamma_j = binom(2j, j) * binom(n, 2j)
    permutahedron   gamma_{n,j} = (j+1) gamma_{n-1,j} + (2n+2-4j) gamma_{n-1,j-1}
    """
    if n < 1:
        raise PreconditionError("gamma_family needs n >= 1")
    if family == "cube":
        return h_to_gamma(tuple(comb(n, i) for i in range(n + 1)))
    if family == "associahedron":
        return tuple(catalan(j) * comb(n, 2 * j) for j in range(n // 2 + 1))
    if family == "cyclohedron":
        return tuple(comb(2 * j, j) * comb(n, 2 * j) for j in range(n // 2 + 1))
    if family == "permutahedron":
        gam = (1,)
        for m in range(2, n + 1):
            prev = gam
            gam = tuple(
                (j + 1) * (prev[j] if j < len(prev) else 0)
                + (2 * m + 2 - 4 * j) * (prev[j - 1] if 1 <= j <= len(prev) else 0)
                for j in range(m // 2 + 1)
            )
        return gam
    raise PreconditionError(f"unknown family {family!r}; expected one of {_FAMILIES}")


# ---------------------------------------------------------------------------
# Conjecture probes: real-rootedness and Kruskal-Katona.
# ---------------------------------------------------------------------------


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = a[:]
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _sign_variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x * y < 0)


def sturm_real_rooted(p: IntPoly) -> bool:
    """Decide exactly whether every complex root of p is real.

    Takes the squarefree part first, builds the Sturm chain over exact
    rationals, and compares the number of distinct real roots (sign
    variations at -infinity minus +infinity) with the degree.
    """
    if p.is_zero():
        raise PreconditionError("the zero polynomial has no root count")
    if p.degree <= 1:
        return True
    coeffs = [Fraction(c) for c in p.coeffs]
    deriv = [Fraction(i * c) for i, c in enumerate(p.coeffs)][1:]
    square_free, _ = _frac_divmod(coeffs, _frac_gcd(coeffs, deriv))
    deg = len(square_free) - 1
    if deg <= 1:
        return True
    chain = [square_free, [i * c for i, c in enumerate(square_free)][1:]]
    while len(chain[-1]) > 1:
        _, r = _frac_divmod(chain[-2], chain[-1])
        if not r:
            raise AssertionError("squarefree Sturm chain hit a zero remainder")
        chain.append([-c for c in r])
    at_minus = [
        (1 if s[-1] > 0 else -1) * (-1 if (len(s) - 1) % 2 else 1) for s in chain
    ]
    at_plus = [1 if s[-1] > 0 else -1 for s in chain]
    return _sign_variations(at_minus) - _sign_variations(at_plus) == deg


def kk_pseudopower(m: int, k: int) -> int:
    """Greedy cascade bound: largest legal successor of m sets of size k."""
    if k < 1:
        raise PreconditionError("kk_pseudopower needs k >= 1")
    if m < 0:
        raise PreconditionError("m must be >= 0")
    total = 0
    kk = k
    while m > 0:
        if kk == 0:
            raise AssertionError("cascade representation did not terminate")
        a = kk
        while comb(a + 1, kk) <= m:
            a += 1
        total += comb(a, kk + 1)
        m -= comb(a, kk)
        kk -= 1
    return total


def kruskal_katona_ok(v: Sequence[int]) -> bool:
    """True when v_0 = 1 and v_{k+1} <= kk_pseudopower(v_k, k) for all
    k >= 1; trailing zeros are ignored."""
    vec = list(v)
    if not vec or vec[0] != 1:
        raise PreconditionError("vector must start with v_0 = 1")
    if any(x < 0 for x in vec):
        raise PreconditionError("entries must be nonnegative")
    while vec and vec[-1] == 0:
        vec.pop()
    for k in range(1, len(vec) - 1):
        if vec[k + 1] > kk_pseudopower(vec[k], k):
            return False
    return True
