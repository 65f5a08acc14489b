"""Exact sequences and truncated power series.

Everything here is integer or rational arithmetic; no floating point.  The
module supplies

* :class:`TruncatedSeries`, an exact integer power series cut at a fixed
  order, with ring operations and division by units;
* :class:`RationalSeries`, the same over exact rationals, used to extract
  Genocchi numbers from the exponential generating function x*tan(x/2);
* the continued-fraction evaluation producing the counting sequence of
  Dumont-4 permutations avoiding 1423 (OEIS A343795), plus an independent
  sweep over the underlying P/R/S/T block system;
* every closed-form counting formula used by the verification harness,
  addressed by :class:`SequenceId`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from . import golden as _golden


class TruncatedSeries:
    """An integer power series truncated at a fixed order (inclusive).

    Operations on mismatched orders truncate to the smaller one.  Division
    requires a nonzero constant term and checks exact divisibility at every
    coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: Optional[int] = None):
        cs = list(coeffs)
        if order is not None:
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def _match(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._match(other)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._match(other)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._match(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._match(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise ValueError("division by a series with zero constant term")
        a, b = self.coeffs, other.coeffs
        q = [0] * (n + 1)
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, min(i, len(b) - 1) + 1):
                acc -= b[j] * q[i - j]
            quot, rem = divmod(acc, b0)
            if rem:
                raise ValueError(f"inexact series division at coefficient {i}")
            q[i] = quot
        return TruncatedSeries(q)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z**k, keeping the truncation order."""
        n = self.order
        return TruncatedSeries([0] * k + list(self.coeffs), n)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries([c * x for x in self.coeffs])

    def pow(self, k: int) -> "TruncatedSeries":
        out = TruncatedSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


class RationalSeries:
    """Exact rational power series, used only for EGF extraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    @classmethod
    def sin(cls, order: int) -> "RationalSeries":
        return cls([Fraction((-1) ** (k // 2), factorial(k)) if k % 2 else 0
                    for k in range(order + 1)])

    @classmethod
    def cos(cls, order: int) -> "RationalSeries":
        return cls([Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else 0
                    for k in range(order + 1)])

    @classmethod
    def sinh(cls, order: int) -> "RationalSeries":
        return cls([Fraction(1, factorial(k)) if k % 2 else 0 for k in range(order + 1)])

    @classmethod
    def cosh(cls, order: int) -> "RationalSeries":
        return cls([Fraction(1, factorial(k)) if k % 2 == 0 else 0
                    for k in range(order + 1)])

    def __truediv__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        if other.coeffs[0] == 0:
            raise ValueError("division by a series with zero constant term")
        a, b = self.coeffs, other.coeffs
        q: list[Fraction] = []
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, min(i, len(b) - 1) + 1):
                acc -= b[j] * q[i - j]
            q.append(acc / b[0])
        return RationalSeries(q)

    def rescale_argument(self, factor: Fraction) -> "RationalSeries":
        """Substitute (factor * x) for x."""
        f = Fraction(factor)
        return RationalSeries([c * f ** k for k, c in enumerate(self.coeffs)])


# ---------------------------------------------------------------------------
# Base sequences


def catalan_number(n: int) -> int:
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return comb(2 * n, n)


def _binom0(a: int, b: int) -> int:
    """Binomial coefficient that is 0 for a negative lower index."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([catalan_number(i) for i in range(order + 1)])


def central_binomial_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([central_binomial(i) for i in range(order + 1)])


def catalan_trunc(parity: str, m: int, order: int) -> TruncatedSeries:
    """Even or odd truncation of the Catalan generating function.

    ``catalan_trunc("even", m, N)`` is  sum_{i<=m} C(2i) z^(2i)  and
    ``catalan_trunc("odd", m, N)`` is  sum_{i<=m} C(2i+1) z^(2i+1),
    both identically zero when m < 0.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    coeffs = [0] * (order + 1)
    if m >= 0:
        start = 0 if parity == "even" else 1
        top = 2 * m + (0 if parity == "even" else 1)
        for d in range(start, min(top, order) + 1, 2):
            coeffs[d] = catalan_number(d)
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# The continued fraction for Dumont-4 permutations avoiding 1423


def _cf_depth(nterms: int) -> int:
    # Dropping the continued-fraction tail at level k leaves coefficients up
    # to index 3k-1 untouched; one extra level is kept as a safety margin.
    return -(-(nterms + 1) // 3) + 1


def d4_1423_series(nterms: int, depth: Optional[int] = None) -> TruncatedSeries:
    """Counting sequence of Dumont-4 permutations avoiding 1423.

    Coefficient n of the result is the number of such permutations of size
    2n, for 0 <= n <= nterms.  Evaluated by running the continued-fraction
    recurrence downward from a truncation depth where the tail is replaced
    by zero; ``depth`` overrides the default level for stability testing.
    """
    if nterms < 0:
        raise ValueError("nterms must be >= 0")
    order = 2 * nterms + 2
    level = _cf_depth(nterms) if depth is None else depth
    one = TruncatedSeries.one(order)
    z_r = TruncatedSeries.zero(order)  # z * R at the level below the cut
    for k in range(level, -1, -1):
        ce = catalan_trunc("even", k, order)
        co_lo = catalan_trunc("odd", k - 1, order)
        co_hi = catalan_trunc("odd", k, order)
        z2ce = ce.shift(2)
        frac3 = (z2ce * ce) / (one - z_r)
        frac2 = z2ce / ((one - co_hi.shift(1)) - frac3)
        base = one - co_lo.shift(1)
        z_r = z2ce / (base * base - frac2)
    # z*R1 is an even function of z; its coefficient at z^(2n+2) counts size 2n.
    for d in range(1, order + 1, 2):
        if z_r.coefficient(d) != 0:
            raise RuntimeError(f"odd-degree coefficient {d} is nonzero")
    return TruncatedSeries([z_r.coefficient(2 * n + 2) for n in range(nterms + 1)])


@dataclass(frozen=True)
class BlockSystemSolution:
    """Series families from the block-decomposition system, keyed by index."""

    p: dict[int, TruncatedSeries]
    r: dict[int, TruncatedSeries]
    s: dict[int, TruncatedSeries]
    t: dict[int, TruncatedSeries]
    nterms: int

    def series(self) -> TruncatedSeries:
        """The counting sequence extracted from R_1 (even-degree reindexing)."""
        r1 = self.r[1]
        for d in range(0, r1.order + 1, 2):
            if r1.coefficient(d) != 0:
                raise RuntimeError(f"even-degree coefficient {d} of R1 is nonzero")
        return TruncatedSeries([r1.coefficient(2 * n + 1) for n in range(self.nterms + 1)])


def solve_prst_system(nterms: int, depth: Optional[int] = None) -> BlockSystemSolution:
    """Solve the four-family block system by a downward sweep.

    At each level the two 2-variable linear subsystems are solved exactly:
    first (P, S) at the even index given the R one level deeper, then (T, R)
    at the odd index given that P.  The tail R at the cut is set to zero.
    The resulting R_1 reproduces :func:`d4_1423_series`, which checks the
    continued fraction against the system it was derived from.
    """
    if nterms < 0:
        raise ValueError("nterms must be >= 0")
    order = 2 * nterms + 2
    level = _cf_depth(nterms) if depth is None else depth
    one = TruncatedSeries.one(order)
    p_fam: dict[int, TruncatedSeries] = {}
    r_fam: dict[int, TruncatedSeries] = {}
    s_fam: dict[int, TruncatedSeries] = {}
    t_fam: dict[int, TruncatedSeries] = {}
    r_next = TruncatedSeries.zero(order)  # R_{2k+3} above the loop body
    for k in range(level, -1, -1):
        ce = catalan_trunc("even", k, order)
        co_lo = catalan_trunc("odd", k - 1, order)
        co_hi = catalan_trunc("odd", k, order)
        # P_{2k+2} and S_{2k+2} given R_{2k+3}.
        tail = one - r_next.shift(1)
        p_cur = one / ((one - co_hi.shift(1)) - (ce * ce).shift(2) / tail)
        s_cur = ce.shift(1) * p_cur / tail
        # T_{2k+1} and R_{2k+1} given P_{2k+2}.
        base = one - co_lo.shift(1)
        r_cur = ce.shift(1) / (base * base - (ce * p_cur).shift(2))
        t_cur = (one + (p_cur * r_cur).shift(1)) / base
        p_fam[2 * k + 2] = p_cur
        s_fam[2 * k + 2] = s_cur
        r_fam[2 * k + 1] = r_cur
        t_fam[2 * k + 1] = t_cur
        r_next = r_cur
    return BlockSystemSolution(p=p_fam, r=r_fam, s=s_fam, t=t_fam, nterms=nterms)


# ---------------------------------------------------------------------------
# Genocchi numbers


@lru_cache(maxsize=None)
def _xtan_half_coeffs(order: int) -> tuple[Fraction, ...]:
    tan = RationalSeries.sin(order) / RationalSeries.cos(order)
    half = tan.rescale_argument(Fraction(1, 2))
    return tuple(half.coeffs)


def genocchi(n: int) -> int:
    """The unsigned Genocchi number G(2n), n >= 1 (OEIS A110501).

    Extracted from the exponential generating function x*tan(x/2): the
    coefficient of x^(2n) times (2n)! must be a positive integer.
    """
    if n < 1:
        raise ValueError("genocchi(n) requires n >= 1")
    coeffs = _xtan_half_coeffs(2 * n + 1)
    val = coeffs[2 * n - 1] * factorial(2 * n)  # leading x shifts by one
    if val.denominator != 1:
        raise RuntimeError(f"non-integral Genocchi value at n={n}")
    return int(val)


def signed_genocchi_egf(order: int) -> RationalSeries:
    """-x*tanh(x/2) as a rational series, for the signed-EGF identity."""
    tanh = RationalSeries.sinh(order) / RationalSeries.cosh(order)
    half = tanh.rescale_argument(Fraction(1, 2))
    return RationalSeries([-half.coefficient(k - 1) for k in range(order + 1)])


# ---------------------------------------------------------------------------
# Closed forms


class SequenceId(str, Enum):
    CATALAN = "catalan"
    CENTRAL_BINOMIAL = "central_binomial"
    GENOCCHI = "genocchi"
    LITTLE_SCHRODER = "little_schroder"
    B7482 = "b7482"
    A_ELIZALDE = "a_elizalde"
    B_ELIZALDE = "b_elizalde"
    D1_2143_TABLE = "d1_2143_table"
    A343795_D4_312 = "a343795_d4_312"
    NOONAN = "noonan"
    ZEILBERGER = "zeilberger"
    D1_132 = "d1_132"
    D1_231 = "d1_231"
    D1_312 = "d1_312"
    D1_213 = "d1_213"
    D1_321 = "d1_321"
    D1_123 = "d1_123"
    D2_123 = "d2_123"
    D2_132 = "d2_132"
    D2_213 = "d2_213"
    D2_231 = "d2_231"
    D2_312 = "d2_312"
    D2_321 = "d2_321"
    D2_3142 = "d2_3142"
    D2_4132 = "d2_4132"
    D2_2143 = "d2_2143"
    D1_PAIR_1342_1423 = "d1_pair_1342_1423"
    D1_PAIR_2341_2413 = "d1_pair_2341_2413"
    D1_PAIR_1342_2413 = "d1_pair_1342_2413"
    D1_PAIR_231_4213 = "d1_pair_231_4213"
    D1_PAIR_1342_4213 = "d1_pair_1342_4213"
    D1_PAIR_2341_1423 = "d1_pair_2341_1423"
    D4_1234 = "d4_1234"
    D4_1342 = "d4_1342"
    D4_1432 = "d4_1432"
    D4_1324 = "d4_1324"
    D4_1243 = "d4_1243"
    D1_132_1 = "d1_132_1"
    D1_312_1 = "d1_312_1"
    D1_231_1 = "d1_231_1"
    D1_213_1 = "d1_213_1"
    D1_321_1 = "d1_321_1"
    D2_321_1 = "d2_321_1"
    D2_3142_1 = "d2_3142_1"
    D2_2143_1 = "d2_2143_1"
    D4_321_1 = "d4_321_1"


@lru_cache(maxsize=None)
def little_schroder(n: int) -> int:
    """Little Schroeder numbers 1, 1, 3, 11, 45, 197, 903, ... (n >= 1)."""
    if n < 1:
        raise ValueError("little_schroder(n) requires n >= 1")
    if n <= 2:
        return 1
    return -little_schroder(n - 1) + 2 * sum(
        little_schroder(k) * little_schroder(n - k) for k in range(1, n))


@lru_cache(maxsize=None)
def b7482(n: int) -> int:
    """1, 1, 3, 11, 39, 139, 495, ...: b(n) = 3 b(n-1) + 2 b(n-2)."""
    if n < 0:
        raise ValueError("b7482(n) requires n >= 0")
    if n == 0 or n == 1:
        return 1
    if n == 2:
        return 3
    return 3 * b7482(n - 1) + 2 * b7482(n - 2)


def a_elizalde(n: int) -> int:
    if n < 0:
        raise ValueError("a_elizalde(n) requires n >= 0")
    if n % 2 == 0:
        m = n // 2
        val = Fraction(comb(3 * m, m), 2 * m + 1)
    else:
        m = (n - 1) // 2
        val = Fraction(comb(3 * m + 1, m), m + 1)
    if val.denominator != 1:
        raise RuntimeError(f"non-integral value at n={n}")
    return int(val)


def b_elizalde(n: int) -> int:
    if n < 0:
        raise ValueError("b_elizalde(n) requires n >= 0")
    if n % 2 == 0:
        k = n // 2
        return _binom0(3 * k - 3, k - 2)
    k = (n - 1) // 2
    return 2 * _binom0(3 * k - 2, k - 2)


def _exact_ratio(num: int, den: int) -> int:
    quot, rem = divmod(num, den)
    if rem:
        raise RuntimeError(f"non-integral closed form: {num}/{den}")
    return quot


def _noonan(n: int) -> int:
    return _exact_ratio(3 * _binom0(2 * n, n - 3), n)


def _zeilberger(n: int) -> int:
    return catalan_number(n + 2) - 4 * catalan_number(n + 1) + 3 * catalan_number(n)


def _d4_321_1(n: int) -> int:
    return (catalan_number(n + 3) - 3 * catalan_number(n + 2)
            - catalan_number(n + 1) + 3 * catalan_number(n))


_FORMULAS: dict[SequenceId, tuple[int, Optional[int], Callable[[int], int]]] = {
    SequenceId.CATALAN: (0, None, catalan_number),
    SequenceId.CENTRAL_BINOMIAL: (0, None, central_binomial),
    SequenceId.GENOCCHI: (1, None, genocchi),
    SequenceId.LITTLE_SCHRODER: (1, None, little_schroder),
    SequenceId.B7482: (0, None, b7482),
    SequenceId.A_ELIZALDE: (0, None, a_elizalde),
    SequenceId.B_ELIZALDE: (0, None, b_elizalde),
    SequenceId.D1_2143_TABLE: (0, 10, lambda n: _golden.d1_wilf_pair_counts()[n]),
    SequenceId.A343795_D4_312: (0, 11, lambda n: _golden.a343795_prefix()[n]),
    SequenceId.NOONAN: (1, None, _noonan),
    SequenceId.ZEILBERGER: (1, None, _zeilberger),
    SequenceId.D1_132: (0, None, catalan_number),
    SequenceId.D1_231: (0, None, catalan_number),
    SequenceId.D1_312: (0, None, catalan_number),
    SequenceId.D1_213: (1, None, lambda n: catalan_number(n - 1)),
    SequenceId.D1_321: (0, None, lambda n: 1),
    SequenceId.D1_123: (3, None, lambda n: 4),
    SequenceId.D2_123: (3, None, lambda n: 0),
    SequenceId.D2_132: (3, None, lambda n: 0),
    SequenceId.D2_213: (3, None, lambda n: 0),
    SequenceId.D2_231: (1, None, lambda n: 2 ** (n - 1)),
    SequenceId.D2_312: (0, None, lambda n: 1),
    SequenceId.D2_321: (0, None, catalan_number),
    SequenceId.D2_3142: (0, None, catalan_number),
    SequenceId.D2_4132: (0, None, catalan_number),
    SequenceId.D2_2143: (0, None, lambda n: a_elizalde(n) * a_elizalde(n + 1)),
    SequenceId.D1_PAIR_1342_1423: (0, None, lambda n: little_schroder(n + 1)),
    SequenceId.D1_PAIR_2341_2413: (0, None, lambda n: little_schroder(n + 1)),
    SequenceId.D1_PAIR_1342_2413: (0, None, lambda n: little_schroder(n + 1)),
    SequenceId.D1_PAIR_231_4213: (1, None, lambda n: 1),
    SequenceId.D1_PAIR_1342_4213: (1, None, lambda n: 2 ** (n - 1)),
    SequenceId.D1_PAIR_2341_1423: (3, None, b7482),
    SequenceId.D4_1234: (0, None, lambda n: (1, 1, 2, 4)[n] if n <= 3 else 0),
    SequenceId.D4_1342: (1, None, lambda n: 2 ** (n - 1)),
    SequenceId.D4_1432: (0, None, catalan_number),
    SequenceId.D4_1324: (0, None, lambda n: n * n - n + 1),
    SequenceId.D4_1243: (0, None, lambda n: n * n - n + 1),
    SequenceId.D1_132_1: (0, None, lambda n: 0),
    SequenceId.D1_312_1: (0, None, lambda n: 0),
    SequenceId.D1_231_1: (0, None, lambda n: _binom0(2 * n - 2, n - 3)),
    SequenceId.D1_213_1: (4, None, lambda n: catalan_number(n - 2) + _binom0(2 * n - 4, n - 4)),
    SequenceId.D1_321_1: (2, None, lambda n: (n - 1) ** 2),
    SequenceId.D2_321_1: (2, None, lambda n: _exact_ratio(5 * _binom0(2 * n, n - 2), n + 3)),
    SequenceId.D2_3142_1: (2, None, lambda n: _binom0(2 * n - 1, n - 2)),
    SequenceId.D2_2143_1: (2, None, lambda n: (a_elizalde(n) * b_elizalde(n + 1)
                                               + b_elizalde(n) * a_elizalde(n + 1)
                                               + a_elizalde(n - 1) * a_elizalde(n))),
    SequenceId.D4_321_1: (1, None, _d4_321_1),
}


def validity_range(seq: SequenceId) -> tuple[int, Optional[int]]:
    lo, hi, _ = _FORMULAS[seq]
    return lo, hi


def closed_form(seq: SequenceId, n: int) -> int:
    """Exact value of the named sequence at index n; errors outside validity."""
    lo, hi, fn = _FORMULAS[seq]
    if n < lo or (hi is not None and n > hi):
        top = "inf" if hi is None else str(hi)
        raise ValueError(f"{seq.value} is defined for {lo} <= n <= {top}, got {n}")
    return fn(n)


# ---------------------------------------------------------------------------
# Generating-function identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""


def gf_identities_check(order: int) -> list[IdentityCheck]:
    """Coefficient-wise verification of the classical series identities.

    Checks, to the given order: the Catalan and central-binomial functional
    equations, the coefficient formulas for C^k and B*C^k (k <= 6), the
    algebraic equation of the little Schroeder generating function, and the
    series forms of the single-occurrence counting formulas.
    """
    if order < 8:
        raise ValueError("identity checks need order >= 8")
    out: list[IdentityCheck] = []
    c = catalan_series(order)
    b = central_binomial_series(order)
    one = TruncatedSeries.one(order)
    z = TruncatedSeries([0, 1], order)

    def check(name: str, ok: bool, detail: str = "") -> None:
        out.append(IdentityCheck(name, ok, detail))

    check("C = 1 + zC^2", c == one + z * c * c)
    check("B = 1 + 2zBC", b == one + (b * c).shift(1).scale(2))

    for k in range(1, 7):
        ck = c.pow(k)
        ok = all(Fraction(k, n + k) * comb(2 * n + k - 1, n) == ck.coefficient(n)
                 for n in range(order + 1))
        check(f"C^{k} coefficients", ok)
        bck = b * ck
        ok = all(comb(2 * n + k, n) == bck.coefficient(n) for n in range(order + 1))
        check(f"BC^{k} coefficients", ok)

    s = TruncatedSeries([0] + [little_schroder(n) for n in range(1, order + 1)])
    lhs = (s.scale(4) - z - one)
    check("(4s - x - 1)^2 = 1 - 6x + x^2",
          lhs * lhs == TruncatedSeries([1, -6, 1], order))

    c6 = c.pow(6)
    gf_single = c6.shift(2) + c6.shift(3)
    check("(z^2+z^3)C^6 matches d4_321_1",
          all(gf_single.coefficient(n) == _d4_321_1(n) for n in range(1, order + 1)))
    check("z^3BC^4 matches d1_231_1",
          all((b * c.pow(4)).shift(3).coefficient(n) == _binom0(2 * n - 2, n - 3)
              for n in range(order + 1)))
    check("z^2C^5 matches d2_321_1",
          all(c.pow(5).shift(2).coefficient(n)
              == _exact_ratio(5 * _binom0(2 * n, n - 2), n + 3)
              for n in range(2, order + 1)))
    check("z^2BC^3 matches d2_3142_1",
          all((b * c.pow(3)).shift(2).coefficient(n) == _binom0(2 * n - 1, n - 2)
              for n in range(2, order + 1)))
    check("z^2C + z^4BC^4 matches d1_213_1",
          all((c.shift(2) + (b * c.pow(4)).shift(4)).coefficient(n)
              == catalan_number(n - 2) + _binom0(2 * n - 4, n - 4)
              for n in range(4, order + 1)))
    return out
