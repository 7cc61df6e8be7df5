"""Exact arithmetic for products of linear factors in one formal variable.

The central object is FactoredRational: a quantity

    scale * prod(numer factors) / prod(denom factors)

where each factor is slope*x + intercept with rational coefficients.  All
expressions kept in this form stay exact, and constancy of the rational
function can be decided by multiset comparison of canonical factors:

  * every factor is normalized to its primitive integer representative
    (coprime integer slope and intercept, slope positive), the extracted
    rational constant being folded into the scale;
  * common factors of numerator and denominator are cancelled multiset-wise
    at construction time.

After this normalization two proportional factors are literally equal, so a
FactoredRational is a constant function exactly when no factors remain, and
the constant is the scale.  The decision is sound for functions of one real
variable: a rational function that agrees with a constant on infinitely many
points (all of them, here) is identically that constant, and conversely a
nonempty reduced factorization has a zero or pole and cannot be constant.

Rationals are stdlib fractions.Fraction throughout: that type already
guarantees reduced lowest terms and a positive denominator.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PoleError

__all__ = [
    "ExactScalar",
    "parse_rational",
    "format_rational",
    "rising",
    "LinearFactor",
    "FactoredRational",
    "expand_factors",
]

ExactScalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational; decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(
            f"expected an exact rational like 3 or 3/4, got {text!r}"
            " (decimal notation is not accepted here)"
        )
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Render "p" or "p/q" (lowest terms, q > 0)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rising(x: Fraction, n: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+n-1); exact for rational x."""
    if n < 0:
        raise ValueError(f"rising factorial needs n >= 0, got {n}")
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


@dataclass(frozen=True, order=True)
class LinearFactor:
    """The affine function slope*x + intercept, slope nonzero."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))
        if self.slope == 0:
            raise ValueError("LinearFactor slope must be nonzero")

    def eval_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def render(self, var: str = "x") -> str:
        s, i = self.slope, self.intercept
        head = var if s == 1 else ("-" + var if s == -1 else f"{format_rational(s)}{var}")
        if i == 0:
            return head
        sign = "+" if i > 0 else "-"
        return f"{head}{sign}{format_rational(abs(i))}"


def _primitive(slope: Fraction, intercept: Fraction) -> tuple[LinearFactor, Fraction]:
    """Normalize slope*x+intercept to coprime integer coefficients.

    Returns (factor, c) with factor = (P, Q), P > 0 integers, gcd(P, Q) = 1,
    and slope*x + intercept == c * (P x + Q) identically.
    """
    den = math.lcm(slope.denominator, intercept.denominator)
    p = slope.numerator * (den // slope.denominator)
    q = intercept.numerator * (den // intercept.denominator)
    g = math.gcd(p, q)
    if p < 0:
        g = -g
    return LinearFactor(Fraction(p // g), Fraction(q // g)), Fraction(g, den)


def _coerce(factor) -> LinearFactor:
    if isinstance(factor, LinearFactor):
        return factor
    slope, intercept = factor
    return LinearFactor(Fraction(slope), Fraction(intercept))


class FactoredRational:
    """scale * prod(numer) / prod(denom), canonical and fully cancelled.

    The variable name is cosmetic (used for rendering only) and is excluded
    from equality; arithmetic keeps the left operand's name.
    """

    __slots__ = ("scale", "numer", "denom", "var")

    def __init__(self, scale, numer: Iterable = (), denom: Iterable = (), var: str = "x"):
        scale = Fraction(scale)
        if scale == 0:
            raise ValueError("FactoredRational scale must be nonzero")
        num = Counter()
        for f in map(_coerce, numer):
            prim, c = _primitive(f.slope, f.intercept)
            scale *= c
            num[prim] += 1
        den = Counter()
        for f in map(_coerce, denom):
            prim, c = _primitive(f.slope, f.intercept)
            scale /= c
            den[prim] += 1
        common = num & den
        num -= common
        den -= common
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "numer", tuple(sorted(num.elements())))
        object.__setattr__(self, "denom", tuple(sorted(den.elements())))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):  # immutable after __init__
        raise AttributeError("FactoredRational is immutable")

    # -- algebra ---------------------------------------------------------

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        return FactoredRational(
            self.scale * other.scale,
            self.numer + other.numer,
            self.denom + other.denom,
            var=self.var,
        )

    def reciprocal(self) -> "FactoredRational":
        return FactoredRational(1 / self.scale, self.denom, self.numer, var=self.var)

    def __truediv__(self, other: "FactoredRational") -> "FactoredRational":
        return self * other.reciprocal()

    def compose_affine(self, coeff, shift, var: str | None = None) -> "FactoredRational":
        """Substitute x -> coeff*x + shift (coeff nonzero)."""
        coeff = Fraction(coeff)
        shift = Fraction(shift)
        if coeff == 0:
            raise ValueError("affine substitution needs a nonzero slope")
        sub = lambda f: (f.slope * coeff, f.slope * shift + f.intercept)
        return FactoredRational(
            self.scale,
            [sub(f) for f in self.numer],
            [sub(f) for f in self.denom],
            var=self.var if var is None else var,
        )

    # -- evaluation and constancy ----------------------------------------

    def eval_at(self, x) -> Fraction:
        """Exact value at a rational point; PoleError at denominator roots."""
        x = Fraction(x)
        out = self.scale
        for f in self.denom:
            v = f.eval_at(x)
            if v == 0:
                raise PoleError(
                    f"denominator factor ({f.render(self.var)}) vanishes at "
                    f"{self.var}={format_rational(x)}"
                )
            out /= v
        for f in self.numer:
            out *= f.eval_at(x)
        return out

    def is_constant(self) -> tuple[bool, Fraction | None]:
        """(True, value) if the function is constant, else (False, None).

        By canonical cancellation: numerator and denominator share no factor,
        so the function is constant exactly when both are empty.
        """
        if not self.numer and not self.denom:
            return True, self.scale
        return False, None

    @property
    def numer_degree(self) -> int:
        return len(self.numer)

    @property
    def denom_degree(self) -> int:
        return len(self.denom)

    # -- equality, hashing, rendering ------------------------------------

    def _key(self):
        return (self.scale, self.numer, self.denom)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        parts = []
        if self.scale != 1 or not (self.numer or self.denom):
            parts.append(format_rational(self.scale))
        if self.numer:
            parts.append("".join(f"({f.render(self.var)})" for f in self.numer))
        head = "*".join(parts) if parts else "1"
        if not self.denom:
            return head
        tail = "".join(f"({f.render(self.var)})" for f in self.denom)
        return f"{head}/{tail}"

    def __repr__(self) -> str:
        return f"FactoredRational({self})"

    def to_text(self) -> str:
        """Exact round-trip form: "num: [...]; den: [...]; scale: p/q"."""
        num = ", ".join(f.render(self.var) for f in self.numer)
        den = ", ".join(f.render(self.var) for f in self.denom)
        return f"num: [{num}]; den: [{den}]; scale: {format_rational(self.scale)}"

    _TEXT_RE = re.compile(r"^num:\s*\[(.*)\];\s*den:\s*\[(.*)\];\s*scale:\s*(\S+)$")
    _FACTOR_RE = re.compile(r"^\s*(-?\d+)?\s*\*?\s*([A-Za-z]\w*)\s*(?:([+-])\s*(\d+))?\s*$")

    @classmethod
    def from_text(cls, text: str) -> "FactoredRational":
        m = cls._TEXT_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a FactoredRational text form: {text!r}")

        var = "x"

        def parse_factors(blob: str) -> list[tuple[Fraction, Fraction]]:
            nonlocal var
            out = []
            for part in filter(None, (p.strip() for p in blob.split(","))):
                fm = cls._FACTOR_RE.match(part)
                if not fm:
                    raise ValueError(f"bad factor {part!r} in {text!r}")
                slope = int(fm.group(1)) if fm.group(1) else 1
                var = fm.group(2)
                inter = int(fm.group(4) or 0)
                if fm.group(3) == "-":
                    inter = -inter
                out.append((Fraction(slope), Fraction(inter)))
            return out

        numer = parse_factors(m.group(1))
        denom = parse_factors(m.group(2))
        return cls(parse_rational(m.group(3)), numer, denom, var=var)


def expand_factors(factors: Sequence[LinearFactor]) -> list[Fraction]:
    """Coefficients (low degree first) of the product of linear factors.

    Independent expansion route used to cross-check the multiset constancy
    decision by polynomial cross-multiplication.
    """
    coeffs = [Fraction(1)]
    for f in factors:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * f.intercept
            nxt[i + 1] += c * f.slope
        coeffs = nxt
    return coeffs
