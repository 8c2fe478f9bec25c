"""
Corpos Ciclotômicos
===================

Aritmética exata em Q(ζ_N) para N ∈ {8, 16, 24}, com elementos
representados na base de potências 1, ζ_N, ..., ζ_N^(φ(N)−1)
reduzida módulo o polinômio ciclotômico Φ_N.

Usado quando u é raiz da unidade (u = 1 ou u = ζ_N^e): nesse caso
todo escalar de Laurent vira um elemento de Q(ζ_N) e o teste de
zero é exato.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from mpmath import mp

from utils.exceptions import DivisionByZero, IncompatibleMode, NonInvertible
from .monomial import ZETA_ORDER, Monomial, Rational

# Coeficientes de Φ_N do grau 0 ao grau φ(N), sem o termo líder
CYCLOTOMIC_POLYNOMIALS = {
    8: (1, 0, 0, 0),
    16: (1, 0, 0, 0, 0, 0, 0, 0),
    24: (1, 0, 0, 0, -1, 0, 0, 0),
}

SUPPORTED_MODULI = tuple(sorted(CYCLOTOMIC_POLYNOMIALS))


def totient(modulus: int) -> int:
    """φ(N) para os módulos suportados."""
    check_modulus(modulus)
    return len(CYCLOTOMIC_POLYNOMIALS[modulus])


def check_modulus(modulus: int):
    """
    Valida o módulo N.

    Raises:
        IncompatibleMode: Se N não for 8, 16 ou 24
    """
    if modulus not in CYCLOTOMIC_POLYNOMIALS:
        raise IncompatibleMode(
            f"Módulo ciclotômico não suportado: {modulus}", supported=list(SUPPORTED_MODULI)
        )


def _reduce(modulus: int, poly: Sequence[Rational]) -> List[Rational]:
    """Reduz um polinômio em ζ_N módulo Φ_N (ζ^φ = −Σ c_i ζ^i)."""
    tail = CYCLOTOMIC_POLYNOMIALS[modulus]
    degree = len(tail)
    work = list(poly)
    for top in range(len(work) - 1, degree - 1, -1):
        coeff = work[top]
        if not coeff:
            continue
        work[top] = 0
        base = top - degree
        for offset, c in enumerate(tail):
            if c:
                work[base + offset] -= coeff * c
    work = work[:degree]
    return work + [0] * (degree - len(work))


@lru_cache(maxsize=None)
def power_basis(modulus: int, exponent: int) -> Tuple[int, ...]:
    """
    Coordenadas inteiras de ζ_N^j na base de potências.

    Args:
        modulus: N
        exponent: j (qualquer inteiro; reduzido mod N)

    Returns:
        Tupla de comprimento φ(N)
    """
    check_modulus(modulus)
    exponent %= modulus
    poly = [0] * (exponent + 1)
    poly[exponent] = 1
    return tuple(int(c) for c in _reduce(modulus, poly))


def solve_rational(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Resolve um sistema linear quadrado por eliminação de Gauss exata.

    Args:
        matrix: Matriz quadrada de racionais
        rhs: Lado direito

    Returns:
        Solução exata

    Raises:
        NonInvertible: Se a matriz for singular
    """
    size = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise NonInvertible("Sistema singular", column=col)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]

    return [row[-1] for row in rows]


@dataclass(frozen=True)
class CycScalar:
    """
    Elemento de Q(ζ_N) em forma canônica.

    Attributes:
        modulus: N ∈ {8, 16, 24}
        coeffs: φ(N) coeficientes racionais (grau crescente)
    """

    modulus: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        check_modulus(self.modulus)
        if len(self.coeffs) != totient(self.modulus):
            raise ValueError(f"Q(ζ_{self.modulus}) exige {totient(self.modulus)} coeficientes")

    @classmethod
    def zero(cls, modulus: int) -> "CycScalar":
        return cls(modulus, (Fraction(0),) * totient(modulus))

    @classmethod
    def from_exponent(cls, modulus: int, exponent: int, coeff: Rational = 1) -> "CycScalar":
        """c·ζ_N^j."""
        return cls(modulus, tuple(Fraction(coeff) * c for c in power_basis(modulus, exponent)))

    @classmethod
    def from_terms(cls, modulus: int, terms) -> "CycScalar":
        """Soma de termos (c, j) significando c·ζ_N^j."""
        coeffs = [Fraction(0)] * totient(modulus)
        for coeff, exponent in terms:
            for i, c in enumerate(power_basis(modulus, exponent)):
                if c:
                    coeffs[i] += Fraction(coeff) * c
        return cls(modulus, tuple(coeffs))

    @classmethod
    def from_laurent(cls, scalar, modulus: int, u_exponent: int) -> "CycScalar":
        """
        Especializa um escalar (Monomial ou LaurentScalar) em u = ζ_N^e.

        ζ₈^a·u^m vira ζ_N^(a·N/8 + e·m).

        Args:
            scalar: Monomial ou LaurentScalar
            modulus: N (múltiplo de 8)
            u_exponent: e
        """
        step = modulus // ZETA_ORDER
        if isinstance(scalar, Monomial):
            terms = [(scalar.coeff, scalar.a, scalar.m)]
        else:
            terms = list(scalar.iter_terms())
        return cls.from_terms(
            modulus, ((coeff, a * step + u_exponent * m) for coeff, a, m in terms)
        )

    # Aritmética

    def _check(self, other: "CycScalar"):
        if not isinstance(other, CycScalar) or other.modulus != self.modulus:
            raise ValueError("Operação entre corpos ciclotômicos diferentes")

    def __add__(self, other: "CycScalar") -> "CycScalar":
        self._check(other)
        return CycScalar(self.modulus, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other: "CycScalar") -> "CycScalar":
        return self + (-other)

    def __mul__(self, other) -> "CycScalar":
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.modulus, tuple(x * other for x in self.coeffs))
        self._check(other)
        product = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    product[i + j] += x * y
        return CycScalar(self.modulus, tuple(Fraction(c) for c in _reduce(self.modulus, product)))

    __rmul__ = __mul__

    def conj(self) -> "CycScalar":
        """Conjugação complexa: ζ_N ↦ ζ_N^(N−1)."""
        return CycScalar.from_terms(
            self.modulus, ((c, -i) for i, c in enumerate(self.coeffs) if c)
        )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inverse(self) -> "CycScalar":
        """
        Inverso exato via sistema linear da multiplicação.

        Raises:
            DivisionByZero: Se o elemento for nulo
        """
        if self.is_zero():
            raise DivisionByZero("Inversão de elemento ciclotômico nulo")
        size = len(self.coeffs)
        columns = [(self * CycScalar.from_exponent(self.modulus, j)).coeffs for j in range(size)]
        matrix = [[columns[j][i] for j in range(size)] for i in range(size)]
        rhs = [Fraction(1)] + [Fraction(0)] * (size - 1)
        return CycScalar(self.modulus, tuple(solve_rational(matrix, rhs)))

    def evaluate(self, precision: int = 30):
        """Valor numérico (mpc) com ``precision`` dígitos."""
        with mp.workdps(precision + 10):
            total = mp.mpc(0)
            for i, c in enumerate(self.coeffs):
                if c:
                    total += mp.mpf(c.numerator) / c.denominator * mp.expjpi(mp.mpf(2 * i) / self.modulus)
            return +total

    def __str__(self) -> str:
        terms = [f"{c}*z{self.modulus}^{i}" for i, c in enumerate(self.coeffs) if c]
        return "+".join(terms) if terms else "0"
