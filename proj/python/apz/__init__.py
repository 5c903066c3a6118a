"""High-precision prime and almost-prime zeta functions.

Values are returned as :class:`decimal.Decimal` carrying ``digits + guard``
significant digits; ``digits`` is the accuracy target.  Real arguments may be
given as ints, floats, strings or Decimals (strings avoid binary rounding).

>>> import apz
>>> apz.prime_zeta(10, digits=20)
Decimal('0.00099360357443698021785585070014773942')
"""

from decimal import Context, Decimal
from fractions import Fraction

from . import _core
from ._core import DomainError, Error, NumericError, ResourceError, UsageError, VerificationError

__all__ = [
    "B",
    "DomainError",
    "Error",
    "L",
    "NumericError",
    "ResourceError",
    "UsageError",
    "VerificationError",
    "almost_prime_zeta",
    "format_paper_style",
    "hurwitz",
    "identity_suite",
    "log2_component",
    "moment",
    "prime_zeta",
    "prime_zeta_prime",
    "table",
    "table_names",
    "tau",
]


def _arg(x):
    if isinstance(x, bool):
        raise TypeError("expected a real number")
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _dec(text, digits, guard):
    return Decimal(text).normalize(Context(prec=digits + guard)) if text else Decimal(0)


def prime_zeta(s, *, digits=64, guard=15, cutoff=101):
    """P(s) = sum over primes p of p^-s, real s > 1."""
    return _dec(_core.prime_zeta(_arg(s), digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def prime_zeta_prime(s, *, digits=64, guard=15, cutoff=101):
    """d/ds P(s)."""
    return _dec(_core.prime_zeta_prime(_arg(s), digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def almost_prime_zeta(k, s, *, moebius=False, derivative=False, partition_sum=False, digits=64, guard=15,
                      cutoff=101):
    """P_k(s) over integers with k prime factors; ``moebius`` selects the
    signed square-free variant, ``derivative`` the s-derivative."""
    text = _core.almost_prime_zeta(k, _arg(s), moebius=moebius, derivative=derivative, partition_sum=partition_sum,
                                   digits=digits, guard=guard, cutoff=cutoff)
    return _dec(text, digits, guard)


def B(k, s, *, moebius=False, digits=64, guard=15, cutoff=101):
    """sum over Omega(n) = k of 1/(n^s (n-1)) for integer s >= 1."""
    return _dec(_core.B(k, s, moebius=moebius, digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def hurwitz(k, s, a, *, moebius=False, derivative=False, digits=64, guard=15, cutoff=101):
    """P_k(s, a) = sum over Omega(n) = k of (n - 1 + a)^-s."""
    text = _core.hurwitz(k, _arg(s), _arg(a), moebius=moebius, derivative=derivative, digits=digits, guard=guard,
                         cutoff=cutoff)
    return _dec(text, digits, guard)


def L(k, l, *, digits=64, guard=15, cutoff=101):
    """sum over Omega(n) = k of 1/n + (1 - 1/n)^l log(1 - 1/n)."""
    return _dec(_core.L(k, l, digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def moment(u=None, *, digits=64, guard=15, cutoff=101):
    """sum_{s>=2} P(s)/s^u, or sum_s P(s)/(s-1) when u is None."""
    return _dec(_core.moment(0 if u is None else u, digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def log2_component(k, *, digits=64, guard=15, cutoff=101):
    """sum over Omega(n) = k of 1/(n 2^n); the components add up to log 2 - 1/2."""
    return _dec(_core.log2_component(k, digits=digits, guard=guard, cutoff=cutoff), digits, guard)


def tau(i, l):
    """Exact coefficient tau_{i,l} of x + (1-x)^l log(1-x)."""
    num, den = _core.tau(i, l)
    return Fraction(int(num), int(den))


def format_paper_style(value, digits_shown, *, unit_digit=False):
    """Truncated rendering such as '.9936(-3)'."""
    return _core.format_paper_style(_arg(value), digits_shown, unit_digit=unit_digit)


def table_names():
    return list(_core.table_names())


def table(name, *, digits=64, guard=15, cutoff=101):
    """Rows of a reference table as a list of dicts in printed order."""
    columns, rows = _core.table(name, digits=digits, guard=guard, cutoff=cutoff)
    out = []
    for key, value in rows:
        row = {c: (int(v) if v.lstrip("-").isdigit() else v) for c, v in zip(columns, key)}
        row["value"] = _dec(value, digits, guard)
        out.append(row)
    return out


def identity_suite(*, digits=64, guard=15, cutoff=101):
    """Runs the structural identity checks; returns a list of result dicts."""
    return list(_core.identity_suite(digits=digits, guard=guard, cutoff=cutoff))
