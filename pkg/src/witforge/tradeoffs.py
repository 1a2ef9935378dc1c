"""Exact arithmetic for the witness-length/runtime trade-off schedules.

The driving quantity is the geometric sum z(alpha, k) = sum of alpha^i for
i = 0..k.  Iterating the two structural constructions k+1 times turns a
DTIWI(n, log n) in DTIME(n^alpha) assumption into witness factor z(alpha, k)
against runtime exponent alpha^(k+1); the interesting ratio is
exponent/witness-factor, which decreases towards alpha - 1.

Rational mode keeps everything exact (z * (alpha - 1) == alpha^(k+1) - 1 is
an identity, not an approximation); float mode documents a 1e-9 comparison
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import AlphaOutOfRange, EpsilonNonpositive

Number = Union[Fraction, float]

FLOAT_TOLERANCE = 1e-9

RATIONAL = "rational"
FLOAT = "float"


@dataclass(frozen=True)
class TradeoffRow:
    k: int
    alpha: Number
    z: Number                 # witness factor: z(alpha, k)
    exponent: Number          # runtime exponent: alpha^(k+1)
    ratio: Number             # exponent / witness factor


def _coerce(alpha, mode: str) -> Number:
    if mode == RATIONAL:
        return Fraction(alpha)
    return float(alpha)


def tradeoff_table(alpha, k_max: int, mode: str = RATIONAL) -> list[TradeoffRow]:
    """Rows k = 0..k_max; z accumulates the geometric sum directly, so the
    closed form (alpha^(k+1) - 1)/(alpha - 1) is a checkable identity."""
    a = _coerce(alpha, mode)
    if not 1 <= a < 2:
        raise AlphaOutOfRange(alpha, 1, 2)
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    rows = []
    z = a ** 0
    power = a
    for k in range(k_max + 1):
        rows.append(TradeoffRow(k=k, alpha=a, z=z, exponent=power,
                                ratio=power / z))
        z = z + power
        power = power * a
    return rows


def required_k_for_epsilon(alpha, epsilon) -> int:
    """Smallest k with alpha^(k+1) / (alpha^(k+1) - 1) <= 1 + epsilon."""
    a = Fraction(alpha)
    eps = Fraction(epsilon)
    if not 1 < a < 2:
        raise AlphaOutOfRange(alpha, 1, 2)
    if eps <= 0:
        raise EpsilonNonpositive(epsilon)
    k = 0
    power = a
    while power * eps < 1 + eps:  # power/(power-1) <= 1+eps <=> power >= (1+eps)/eps
        power *= a
        k += 1
    return k


def required_base_alpha(target_alpha: float, k: int) -> float:
    """The base speed-up that, iterated k+1 times, stays within target_alpha:
    target_alpha^(1/(k+1))."""
    if target_alpha <= 1:
        raise AlphaOutOfRange(target_alpha, 1, float("inf"))
    if k < 0:
        raise ValueError("k must be nonnegative")
    return float(target_alpha) ** (1.0 / (k + 1))


@dataclass(frozen=True)
class ScheduleStep:
    k: int
    class_in: str
    translation: str
    padding: str
    class_out: str
    witness_factor: Number
    exponent: Number


def speedup_schedule(name: str, alpha, k: int,
                     mode: str = RATIONAL) -> list[ScheduleStep]:
    """Symbolic trace of the k+1 induction steps: each step splits the
    witness budget, then pads with f(n) = n^(alpha^(j+1)).  No machines run;
    the step arithmetic must agree with the trade-off table rows."""
    a = _coerce(alpha, mode)
    if not 1 <= a < 2:
        raise AlphaOutOfRange(alpha, 1, 2)
    rows = tradeoff_table(alpha, k, mode=mode)
    steps = []
    for j in range(k + 1):
        z_j = rows[j].z
        exp_j = rows[j].exponent
        class_in = f"DTIWI(n, {_fmt(z_j)}*log(n)) [{name}]"
        if j == 0:
            translation = "base assumption: DTIWI(n, log(n)) in DTIME(n^a)"
        else:
            translation = (f"split witness {_fmt(z_j)}*log(n) = "
                           f"{_fmt(rows[j - 1].z)}*log(n) + "
                           f"{_fmt(rows[j - 1].exponent)}*log(n)")
        padding = f"pad with f(n) = n^{_fmt(exp_j)}"
        class_out = f"DTIME(n^{_fmt(exp_j)})"
        steps.append(ScheduleStep(
            k=j, class_in=class_in, translation=translation, padding=padding,
            class_out=class_out, witness_factor=z_j, exponent=exp_j))
    return steps


def _fmt(value: Number) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return f"{value:.6g}"
