"""Exact p-adic moment sequences of the Todd, Witten and sharped orientations.

The heavy lifting happens in the C++ extension ``_core``; this module turns
its ``"num/den"`` strings into :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._core import (
    ConfigError,
    DomainError,
    Error,
    MomentSequence,
    NonIntegralError,
    PrecisionProfile,
    ProfileMismatchError,
    QTSeries,
    RouteMismatchError,
    TestPolynomial,
    bernoulli as _bernoulli,
    canonical_family,
    compute_moments,
    default_profile,
    digit_table,
    moment_sequence_from_json,
    reduce as _reduce,
    run_cli,
    selfcheck,
    valuation as _valuation,
    verify,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Error",
    "MomentSequence",
    "NonIntegralError",
    "PrecisionProfile",
    "ProfileMismatchError",
    "QTSeries",
    "RouteMismatchError",
    "TestPolynomial",
    "bernoulli",
    "canonical_family",
    "coefficients",
    "compute_moments",
    "default_profile",
    "digit_table",
    "moment_sequence_from_json",
    "moments",
    "polynomial",
    "reduce",
    "run_cli",
    "selfcheck",
    "valuation",
    "verify",
]


def _text(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def bernoulli(n):
    return Fraction(_bernoulli(n))


def reduce(value, p, N):
    """Residue and most-significant-first digit string of value mod p^N."""
    return _reduce(_text(value), p, N)


def valuation(value, p):
    """p-adic valuation; None for zero."""
    return _valuation(_text(value), p)


def coefficients(series):
    """{(q_degree, t_degree): Fraction} for the nonzero coefficients."""
    return {(i, j): Fraction(c) for i, j, c in series.terms()}


def moments(kind="todd-sharp", route="closed", c=None, profile=None, variant="full", **window):
    """Compute a moment sequence.

    ``profile`` defaults to the command-line defaults for ``p`` (keyword,
    default 3); other keywords (precision, q_order, tmin, tmax, nmax)
    override single fields.
    """
    if profile is None:
        p = window.pop("p", 3)
        base = default_profile(p, kind)
        fields = dict(p=base.p, precision=base.precision, q_order=base.q_order,
                      tmin=base.tmin, tmax=base.tmax, nmax=base.nmax)
        fields.update(window)
        profile = PrecisionProfile(**fields)
    elif window:
        raise TypeError("pass either a profile or window keywords, not both")
    if c is None:
        c = profile.p + 1
    return compute_moments(kind, route, _text(c), profile, variant)


def polynomial(coeffs, label="f"):
    """TestPolynomial from {exponent: rational}."""
    return TestPolynomial({int(k): _text(v) for k, v in coeffs.items()}, label)
