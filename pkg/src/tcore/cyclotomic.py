"""Exact arithmetic in the cyclotomic ring Z[w_s].

Elements are stored as integer coefficient vectors in the basis
1, w, ..., w^(phi(s)-1), i.e. as remainders modulo the s-th cyclotomic
polynomial.  No floating point complex numbers are used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class CyclotomicError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division of ``a`` by ``b``.

    Works over any field-like coefficients; with integer coefficients ``b``
    must be monic (or the quotient must happen to be integral).
    """
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim(list(a))
    if len(rem) < len(b):
        return [], rem
    lead = b[-1]
    quot = [0] * (len(rem) - len(b) + 1)
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        if isinstance(c, int) and isinstance(lead, int):
            if c % lead:
                raise CyclotomicError("inexact integer polynomial division")
            f = c // lead
        else:
            f = c / lead
        quot[k] = f
        for i, y in enumerate(b):
            rem[k + i] -= f * y
    return _trim(quot), _trim(rem[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(s: int) -> tuple[int, ...]:
    """Coefficients of Phi_s, lowest degree first.

    Obtained by dividing x^s - 1 by Phi_d for every proper divisor d of s.
    """
    if s < 1:
        raise CyclotomicError(f"cyclotomic index must be >= 1, got {s}")
    p = [-1] + [0] * (s - 1) + [1]
    for d in range(1, s):
        if s % d == 0:
            p, r = poly_divmod(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(p)


def euler_phi(s: int) -> int:
    return len(cyclotomic_polynomial(s)) - 1


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise CyclotomicError(f"{n} has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


def _reduce(p: Sequence, s: int) -> list:
    """Fold exponents mod s, then reduce modulo Phi_s."""
    folded = [0] * s
    for k, c in enumerate(p):
        folded[k % s] += c
    phi = cyclotomic_polynomial(s)
    n = len(phi) - 1
    # Phi_s is monic, so the long division stays integral
    for k in range(s - 1, n - 1, -1):
        c = folded[k]
        if c:
            base = k - n
            for i, y in enumerate(phi):
                if y:
                    folded[base + i] -= c * y
    return folded[:n]


def _mulmod(a: Sequence, b: Sequence, s: int) -> list:
    return _reduce(poly_mul(a, b), s)


def _pad(p: Sequence, n: int) -> tuple:
    return tuple(p) + (0,) * (n - len(p))


# ---------------------------------------------------------------------------
# CycInt
# ---------------------------------------------------------------------------

class CycInt:
    """An element of Z[w_s] in canonical form."""

    __slots__ = ("s", "coeffs")

    def __init__(self, s: int, coeffs: Iterable[int] = ()):
        if s < 1:
            raise CyclotomicError(f"modulus must be >= 1, got {s}")
        coeffs = [int(c) for c in coeffs]
        self.s = s
        self.coeffs = _pad(_reduce(coeffs, s), euler_phi(s))

    @classmethod
    def _canonical(cls, s: int, coeffs: tuple) -> CycInt:
        # sums and negations of canonical forms are already canonical
        out = object.__new__(cls)
        out.s = s
        out.coeffs = coeffs
        return out

    @classmethod
    def from_exponents(cls, s: int, terms: dict[int, int] | Iterable[int]) -> CycInt:
        """Sum of c * w^k; exponents may be any integers (read mod s).

        ``terms`` is either a mapping exponent -> coefficient or an iterable
        of exponents each counted once.
        """
        folded = [0] * s
        items = terms.items() if isinstance(terms, dict) else ((k, 1) for k in terms)
        for k, c in items:
            folded[k % s] += c
        return cls(s, folded)

    @classmethod
    def integer(cls, s: int, n: int) -> CycInt:
        return cls(s, [n])

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.s != self.s:
                raise CyclotomicError(f"modulus mismatch: {self.s} vs {other.s}")
            return other
        if isinstance(other, int):
            return CycInt.integer(self.s, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._canonical(self.s, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt._canonical(self.s, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._canonical(self.s, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.s, _mulmod(self.coeffs, other.coeffs, self.s))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            raise CyclotomicError("negative powers are only defined for units; use root_power")
        out, base = CycInt.integer(self.s, 1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.integer(self.s, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.s == other.s and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.s, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def galois(self, m: int) -> CycInt:
        """Apply the automorphism w -> w^m (m coprime to s)."""
        if gcd(m, self.s) != 1:
            raise CyclotomicError(f"w -> w^{m} is not an automorphism for s={self.s}")
        return CycInt.from_exponents(self.s, {k * m: c for k, c in enumerate(self.coeffs) if c})

    def conjugate(self) -> CycInt:
        return self.galois(-1)

    def exact_div(self, other: CycInt | int) -> CycInt:
        """Quotient in Z[w_s]; raises if it does not exist.

        Inverts ``other`` in Q[x]/Phi_s by the extended Euclidean algorithm
        and checks that the product has integer coefficients.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[w_s]")
        inv = _inverse_mod_phi([Fraction(c) for c in other.coeffs], self.s)
        q = _mulmod([Fraction(c) for c in self.coeffs], inv, self.s)
        if any(c.denominator != 1 for c in q):
            raise CyclotomicError(f"{self} is not divisible by {other} in Z[w_{self.s}]")
        return CycInt(self.s, [int(c) for c in q])

    # -- display -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycInt({self.s}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, symbol: str = "w") -> str:
        """Human form such as ``1 - w`` or ``-1 - 2w + w^3``."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
            mag = abs(c)
            body = str(mag) if (k == 0 or mag != 1) else ""
            body += mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"


def _inverse_mod_phi(a: list[Fraction], s: int) -> list[Fraction]:
    phi = [Fraction(c) for c in cyclotomic_polynomial(s)]
    r0, r1 = phi, _trim(list(a))
    t0, t1 = [], [Fraction(1)]
    while r1 and len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        qt = poly_mul(q, t1)
        n = max(len(t0), len(qt))
        t_new = _trim([(t0[i] if i < len(t0) else 0) - (qt[i] if i < len(qt) else 0) for i in range(n)])
        r0, r1, t0, t1 = r1, r, t1, t_new
    if not r1:
        raise CyclotomicError("element is not invertible modulo Phi_s")
    c = r1[0]
    return [x / c for x in t1]


def root_power(s: int, k: int) -> CycInt:
    """w_s^k in canonical form."""
    return CycInt.from_exponents(s, {k: 1})


# ---------------------------------------------------------------------------
# exponent vectors and symmetric functions at roots of unity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentVector:
    """Nondecreasing exponents 0 <= j_0 <= ... <= j_{t-1} <= s-1."""

    s: int
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exps)
        object.__setattr__(self, "exps", exps)
        if any(not 0 <= j < self.s for j in exps):
            raise CyclotomicError(f"exponents must lie in [0, {self.s - 1}]: {exps}")
        if any(a > b for a, b in zip(exps, exps[1:])):
            raise CyclotomicError(f"exponents must be nondecreasing: {exps}")

    @classmethod
    def sorted_from(cls, s: int, exps: Iterable[int]) -> ExponentVector:
        return cls(s, tuple(sorted(j % s for j in exps)))

    @property
    def t(self) -> int:
        return len(self.exps)

    def inverse(self) -> ExponentVector:
        return ExponentVector.sorted_from(self.s, (-j for j in self.exps))

    def roots(self) -> list[CycInt]:
        return [root_power(self.s, j) for j in self.exps]


def power_sum(v: ExponentVector, k: int) -> CycInt:
    return CycInt.from_exponents(v.s, [k * j for j in v.exps])


def elementary_symmetric_all(v: ExponentVector) -> list[CycInt]:
    """[sigma_0, ..., sigma_t] via expansion of prod (1 + x_i T)."""
    out = [CycInt.integer(v.s, 1)] + [CycInt(v.s)] * v.t
    for x in v.roots():
        for k in range(v.t, 0, -1):
            out[k] = out[k] + x * out[k - 1]
    return out


def elementary_symmetric(v: ExponentVector, k: int) -> CycInt:
    if not 0 <= k <= v.t:
        raise CyclotomicError(f"k must lie in [0, {v.t}], got {k}")
    return elementary_symmetric_all(v)[k]


def _newton_sigmas(h: list[CycInt], kmax: int, s: int) -> list[list[Fraction]]:
    """sigma_0..sigma_kmax from power sums h_1..h_kmax by Newton's recursion.

    k sigma_k = sum_{i=1}^k (-1)^(i-1) sigma_{k-i} h_i, over Q[w_s].
    """
    n = euler_phi(s)
    sig: list[list[Fraction]] = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    for k in range(1, kmax + 1):
        acc = [Fraction(0)] * n
        for i in range(1, k + 1):
            term = _mulmod(sig[k - i], [Fraction(c) for c in h[i - 1].coeffs], s)
            sign = 1 if i % 2 else -1
            for m, c in enumerate(term):
                acc[m] += sign * c
        sig.append([c / k for c in acc])
    return sig


@dataclass(frozen=True)
class NewtonReport:
    holds: bool
    power_sums_equal: bool
    sigmas_equal: bool
    h_v: list[CycInt]
    h_w: list[CycInt]
    sigma_v: list[CycInt]
    sigma_w: list[CycInt]


def newton_identities_check(v: ExponentVector, w: ExponentVector, kmax: int) -> NewtonReport:
    """Check that equal power sums h_1..h_kmax force equal sigma_1..sigma_kmax.

    The sigmas are rebuilt from the power sums with exact rational Newton
    recursion and compared against the direct expansion as well.
    """
    if v.s != w.s or v.t != w.t:
        raise CyclotomicError("exponent vectors must share s and t")
    if not 1 <= kmax <= v.t:
        raise CyclotomicError(f"kmax must lie in [1, {v.t}]")
    s = v.s
    h_v = [power_sum(v, k) for k in range(1, kmax + 1)]
    h_w = [power_sum(w, k) for k in range(1, kmax + 1)]
    sig_v = elementary_symmetric_all(v)[1 : kmax + 1]
    sig_w = elementary_symmetric_all(w)[1 : kmax + 1]
    for h, direct in ((h_v, sig_v), (h_w, sig_w)):
        rebuilt = _newton_sigmas(h, kmax, s)[1:]
        for r, d in zip(rebuilt, direct):
            if any(c.denominator != 1 for c in r) or CycInt(s, [int(c) for c in r]) != d:
                raise CyclotomicError("Newton recursion disagrees with direct expansion")
    h_eq = h_v == h_w
    s_eq = sig_v == sig_w
    return NewtonReport(
        holds=(not h_eq) or s_eq,
        power_sums_equal=h_eq,
        sigmas_equal=s_eq,
        h_v=h_v,
        h_w=h_w,
        sigma_v=sig_v,
        sigma_w=sig_w,
    )


def sigma_star_relation_check(v: ExponentVector, k: int) -> bool:
    """sigma_t(x) * sigma_k(1/x) == sigma_{t-k}(x)."""
    if not 1 <= k <= v.t - 1:
        raise CyclotomicError(f"k must lie in [1, {v.t - 1}], got {k}")
    sig = elementary_symmetric_all(v)
    sig_inv = elementary_symmetric_all(v.inverse())
    return sig[v.t] * sig_inv[k] == sig[v.t - k]


# ---------------------------------------------------------------------------
# sum/product coincidences of roots of unity
# ---------------------------------------------------------------------------

def uniqueness_predicted(s: int, t: int) -> bool:
    """True when s is prime or t < 2 * (smallest prime factor of s)."""
    return is_prime(s) or t < 2 * smallest_prime_factor(s)


@dataclass(frozen=True)
class Lemma14Result:
    conditions_hold: bool
    equal_forced: bool
    j: tuple[int, ...]
    j_tilde: tuple[int, ...]
    uniqueness_predicted: bool

    def to_dict(self) -> dict:
        return {
            "conditions_hold": self.conditions_hold,
            "equal_forced": self.equal_forced,
            "j": list(self.j),
            "j_tilde": list(self.j_tilde),
            "uniqueness_predicted": self.uniqueness_predicted,
        }


def lemma14_decide(j: ExponentVector, j_tilde: ExponentVector, *, require_coprime: bool = True) -> Lemma14Result:
    """Test whether two exponent vectors have equal root sums and products.

    ``conditions_hold`` is the exact equality of sum w^j_i and of prod w^j_i;
    ``equal_forced`` is whether the vectors coincide.
    """
    if j.s != j_tilde.s or j.t != j_tilde.t:
        raise CyclotomicError("exponent vectors must share s and t")
    s, t = j.s, j.t
    if require_coprime and gcd(s, t) != 1:
        raise CyclotomicError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")
    sums_equal = power_sum(j, 1) == power_sum(j_tilde, 1)
    products_equal = (sum(j.exps) - sum(j_tilde.exps)) % s == 0
    return Lemma14Result(
        conditions_hold=sums_equal and products_equal,
        equal_forced=j.exps == j_tilde.exps,
        j=j.exps,
        j_tilde=j_tilde.exps,
        uniqueness_predicted=uniqueness_predicted(s, t) if s > 1 else True,
    )


_SPECIAL_FAMILIES = {
    4: ((1, 1, 3, 3), (0, 0, 2, 2), 4),
    6: ((1, 1, 4, 4), (0, 2, 3, 5), 4),
    9: ((3, 3, 6, 6), (1, 2, 4, 5, 7, 8), 6),
}


def counterexample_family(s: int, t: int, *, require_coprime: bool = True) -> tuple[ExponentVector, ExponentVector]:
    """A pair j != j_tilde with equal root sums and products.

    Exists for composite s and t >= 2 p_s.  The vectors are padded with
    zeros to length t and sorted.
    """
    if is_prime(s) or s < 4:
        raise CyclotomicError(f"s must be composite, got {s}")
    p = smallest_prime_factor(s)
    if t < 2 * p:
        raise CyclotomicError(f"need t >= 2 p_s = {2 * p}, got t={t}")
    if require_coprime and gcd(s, t) != 1:
        raise CyclotomicError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")
    if s in _SPECIAL_FAMILIES:
        core, core_tilde, min_t = _SPECIAL_FAMILIES[s]
        if t < min_t:
            raise CyclotomicError(f"the s={s} family needs t >= {min_t}")
    else:
        step = s // p
        # every composite s other than 4, 6, 9 has s/p_s >= 4, hence s > 3 p_s
        assert 3 + step * (p - 1) < s
        core = tuple(x for k in range(p) for x in (2 + step * k, 2 + step * k))
        core_tilde = tuple(x for k in range(p) for x in (1 + step * k, 3 + step * k))
    j = ExponentVector.sorted_from(s, (0,) * (t - len(core)) + core)
    j_tilde = ExponentVector.sorted_from(s, (0,) * (t - len(core_tilde)) + core_tilde)
    res = lemma14_decide(j, j_tilde, require_coprime=False)
    if not res.conditions_hold or res.equal_forced:
        raise CyclotomicError(f"family for (s, t) = ({s}, {t}) failed its own check")
    return j, j_tilde
