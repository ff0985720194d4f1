"""Parity of spin involutions from fixed-set data, and Dirac index arithmetic.

Parity rule: a nonempty fixed set with a 2-dimensional component makes the
involution odd; an all-0-dimensional fixed set makes it even. Free
involutions are refused rather than guessed. All index quantities are
exact rationals because half-integers must survive untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ODD = "odd"
EVEN = "even"


class IndeterminateParityError(ValueError):
    """Fixed set is empty: the fixed-set rule cannot decide the parity."""


class PositiveSignatureError(ValueError):
    """Positive-signature inputs are outside the obstruction's standing assumption."""


@dataclass(frozen=True)
class ParityClass:
    value: str
    mixed: bool = False  # both dimensions present; dimension-2 clause wins


@dataclass(frozen=True)
class IndexData:
    """Real Dirac index and the twisted index of the composed involution."""

    index_real: Fraction
    index_twisted: Fraction | None = None


def classify_parity(fixed) -> ParityClass:
    """Decide odd/even from a FixedSetData-like object with components."""
    components = tuple(fixed.components)
    if not components or all(count == 0 for _, count in components):
        raise IndeterminateParityError(
            "empty fixed set: parity cannot be read off the fixed-set dimensions"
        )
    dims = {dim for dim, count in components if count > 0}
    if 2 in dims:
        return ParityClass(ODD, mixed=(0 in dims))
    return ParityClass(EVEN)


def lefschetz_index(n_plus: int, n_minus: int) -> Fraction:
    """Twisted Dirac index of an even involution with isolated fixed points."""
    return Fraction(n_plus - n_minus, 2)


def real_index_from_signature(signature: int) -> Fraction:
    """Real Dirac index -signature/4 of a spin 4-manifold."""
    if signature > 0:
        raise PositiveSignatureError(
            f"signature {signature} > 0 is outside the supported range"
        )
    return Fraction(-signature, 4)


def k_odd(signature: int) -> Fraction:
    """Lower bound -signature/16 that a smooth odd involution forces on b_plus."""
    return Fraction(-signature, 16)


def k_klein(signature: int, index_twisted: Fraction | int) -> Fraction:
    """Lower bound -signature/32 + index/8 in the Klein four-group inequality.

    Callers realize the absolute value of the twisted index by evaluating
    at both signs and keeping the larger bound.
    """
    return (Fraction(-signature, 4) + Fraction(index_twisted)) / 8
