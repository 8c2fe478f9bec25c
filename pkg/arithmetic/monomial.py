"""
Monômios
========

Monômios c·ζ₈^a·u^m: o alfabeto de entradas dos modelos de spin.
O sinal de ζ₈⁴ = −1 é absorvido no coeficiente, de modo que
a fica sempre em 0..3.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from utils.exceptions import DivisionByZero

ZETA_ORDER = 8
HALF_TURN = ZETA_ORDER // 2

Rational = Union[int, Fraction]


def fold_zeta(coeff: Fraction, a: int) -> Tuple[Fraction, int]:
    """
    Reduz ζ₈^a para a em 0..3, passando ζ₈⁴ = −1 ao coeficiente.

    Args:
        coeff: Coeficiente racional
        a: Expoente de ζ₈ (qualquer inteiro)

    Returns:
        (coeficiente, expoente em 0..3)
    """
    a %= ZETA_ORDER
    if a >= HALF_TURN:
        return -coeff, a - HALF_TURN
    return coeff, a


def format_term(coeff: Fraction, a: int, m: int) -> str:
    """Formata um termo como 'c*z8^a*u^m'."""
    return f"{coeff}*z8^{a}*u^{m}"


@dataclass(frozen=True)
class Monomial:
    """
    Monômio c·ζ₈^a·u^m com coeficiente não nulo.

    Attributes:
        coeff: Coeficiente racional (sinal absorvido)
        a: Expoente de ζ₈ em 0..3
        m: Expoente de u
    """

    coeff: Fraction
    a: int
    m: int

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        if coeff == 0:
            raise DivisionByZero("Monômio com coeficiente nulo")
        coeff, a = fold_zeta(coeff, int(self.a))
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", int(self.m))

    @classmethod
    def one(cls) -> "Monomial":
        return cls(Fraction(1), 0, 0)

    @classmethod
    def zeta(cls, a: int, coeff: Rational = 1) -> "Monomial":
        """ζ₈^a (com coeficiente opcional)."""
        return cls(Fraction(coeff), a, 0)

    @classmethod
    def u_power(cls, m: int, coeff: Rational = 1) -> "Monomial":
        """c·u^m."""
        return cls(Fraction(coeff), 0, m)

    def __mul__(self, other: Union["Monomial", Rational]) -> "Monomial":
        if isinstance(other, Monomial):
            return Monomial(self.coeff * other.coeff, self.a + other.a, self.m + other.m)
        if isinstance(other, (int, Fraction)):
            return Monomial(self.coeff * other, self.a, self.m)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.a, self.m)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "Monomial":
        """Inverso exato: c⁻¹·ζ₈^(−a)·u^(−m)."""
        return Monomial(1 / self.coeff, -self.a, -self.m)

    def conj(self, inverts_u: bool) -> "Monomial":
        """
        Conjugação complexa.

        Args:
            inverts_u: True se |u| = 1 (conj(u) = u⁻¹); False se u é real
        """
        return Monomial(self.coeff, -self.a, -self.m if inverts_u else self.m)

    @property
    def is_unit_coefficient(self) -> bool:
        return abs(self.coeff) == 1

    def packed(self) -> Tuple[int, int]:
        """
        Forma compacta (a8, m) com a8 em 0..7 e coeficiente ±1 dobrado em ζ₈⁴.

        Raises:
            ValueError: Se o coeficiente não for ±1
        """
        if not self.is_unit_coefficient:
            raise ValueError(f"Coeficiente não unitário: {self.coeff}")
        return (self.a + (HALF_TURN if self.coeff < 0 else 0), self.m)

    def __str__(self) -> str:
        return format_term(self.coeff, self.a, self.m)
