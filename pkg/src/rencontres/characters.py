"""Characters of S_n that depend only on the number of fixed points.

The permutation character is ``k``, the trivial one ``1`` and the standard
one ``k - 1``, where ``k`` counts fixed points. Since fix(g^-1) = fix(g),
the inner product reduces to a weighted sum over a rencontres row; the
oracle checks that reduction by inverting explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DEFAULT_ENGINE, Engine, IntPoly
from .reports import PreconditionError, VerificationReport


@dataclass(frozen=True)
class FixedPointCharacter:
    poly: IntPoly

    def __call__(self, k: int) -> int:
        return self.poly(k)

    def __add__(self, other: "FixedPointCharacter") -> "FixedPointCharacter":
        return FixedPointCharacter(self.poly + other.poly)


TRIVIAL = FixedPointCharacter(IntPoly((1,)))
PERMUTATION = FixedPointCharacter(IntPoly((0, 1)))
STANDARD = FixedPointCharacter(IntPoly((-1, 1)))

# order is part of the oracle-compare output format
NAMED_CHARACTERS = (TRIVIAL, PERMUTATION, STANDARD)


def _moment(n: int, g: IntPoly, engine: Engine) -> Fraction:
    row = engine.rencontres_row(n)
    return Fraction(sum(g(k) * row[k] for k in range(n + 1)), engine.factorial(n))


def inner_product(
    n: int,
    chi: FixedPointCharacter,
    phi: FixedPointCharacter,
    engine: Engine = DEFAULT_ENGINE,
    fallback_to_oracle: bool = False,
) -> Fraction:
    """<chi, phi> on S_n as an exact fraction.

    Requires ``n >= deg(chi * phi)``. With ``fallback_to_oracle`` the
    too-small cases are answered by enumeration instead of raising.
    """
    prod = chi.poly * phi.poly
    if n < prod.degree:
        if fallback_to_oracle:
            from .oracle import inner_product_oracle

            return inner_product_oracle(n, chi, phi)
        raise PreconditionError(f"inner product needs n >= {prod.degree}, got n={n}")
    return _moment(n, prod, engine)


def check_character_norm(n: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """sum_k (k-1)^2 f_n(k) == n!"""
    if n < 2:
        raise PreconditionError(f"character norm identity needs n >= 2, got n={n}")
    row = engine.rencontres_row(n)
    lhs = sum((k - 1) ** 2 * row[k] for k in range(n + 1))
    return VerificationReport("character_norm", {"n": n}, lhs, engine.factorial(n))


def irreducibility_of_standard(n: int, engine: Engine = DEFAULT_ENGINE) -> bool:
    if n < 2:
        raise PreconditionError(f"standard representation is only considered for n >= 2, got n={n}")
    return inner_product(n, STANDARD, STANDARD, engine) == 1


def bell_moment(n: int, g: IntPoly, engine: Engine = DEFAULT_ENGINE) -> Fraction:
    """(1/n!) sum_k g(k) f_n(k); equals sum_i a_i B_i when n >= deg g."""
    if n < g.degree:
        raise PreconditionError(f"bell moment needs n >= deg(g)={g.degree}, got n={n}")
    return _moment(n, g, engine)
