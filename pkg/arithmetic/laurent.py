"""
Escalares de Laurent
====================

Elementos de Q(ζ₈)[u, u⁻¹] / (u⁸ − (k−2)u⁴ + 1) em forma canônica:
expoentes de ζ₈ em 0..3 e expoentes de u na janela [−4, 3].

A relação vem de (u² + u⁻²)² = k. Ela pode ser redutível
(k=4 dá (u⁴−1)²), por isso "não nulo no quociente" não implica
"não nulo na raiz": a decisão final fica com os backends.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from mpmath import mp

from utils.exceptions import DivisionByZero, NonInvertible, ParseError
from .monomial import Monomial, Rational, fold_zeta, format_term

M_LOW = -4
M_HIGH = 3
WINDOW = M_HIGH - M_LOW + 1
ZETA_SLOTS = 4
DIM = ZETA_SLOTS * WINDOW

Scalar = Union[Monomial, "LaurentScalar"]


@lru_cache(maxsize=None)
def power_vector(k: int, m: int) -> Tuple[int, ...]:
    """
    Coeficientes inteiros de u^m na base u^−4..u^3 do quociente.

    Usa u^m = (k−2)u^(m−4) − u^(m−8) acima da janela e
    u^m = (k−2)u^(m+4) − u^(m+8) abaixo dela.

    Args:
        k: Ordem da matriz de Hadamard
        m: Expoente de u

    Returns:
        Tupla de comprimento 8 (índice m − M_LOW)
    """
    if M_LOW <= m <= M_HIGH:
        vector = [0] * WINDOW
        vector[m - M_LOW] = 1
        return tuple(vector)
    if m > M_HIGH:
        near, far = power_vector(k, m - 4), power_vector(k, m - 8)
    else:
        near, far = power_vector(k, m + 4), power_vector(k, m + 8)
    return tuple((k - 2) * x - y for x, y in zip(near, far))


def slot(a: int, m: int) -> int:
    """Índice do termo ζ₈^a·u^m (a em 0..3, m na janela) no vetor canônico."""
    return a * WINDOW + (m - M_LOW)


@dataclass(frozen=True)
class LaurentScalar:
    """
    Escalar exato em forma canônica.

    Attributes:
        k: Ordem que fixa a relação de redução
        coeffs: 32 coeficientes racionais, índice a·8 + (m + 4)
    """

    k: int
    coeffs: Tuple[Fraction, ...]

    # Construtores

    @classmethod
    def zero(cls, k: int) -> "LaurentScalar":
        return cls(k, (Fraction(0),) * DIM)

    @classmethod
    def from_int(cls, k: int, value: Rational) -> "LaurentScalar":
        coeffs = [Fraction(0)] * DIM
        coeffs[slot(0, 0)] = Fraction(value)
        return cls(k, tuple(coeffs))

    @classmethod
    def one(cls, k: int) -> "LaurentScalar":
        return cls.from_int(k, 1)

    @classmethod
    def from_terms(cls, k: int, terms: Iterable[Tuple[Rational, int, int]]) -> "LaurentScalar":
        """
        Canonicaliza uma soma Σ c·ζ₈^a·u^m.

        Args:
            k: Ordem
            terms: Triplas (c, a, m) com a e m inteiros quaisquer

        Returns:
            Escalar canônico
        """
        coeffs = [Fraction(0)] * DIM
        for coeff, a, m in terms:
            coeff, a = fold_zeta(Fraction(coeff), a)
            if coeff == 0:
                continue
            base = a * WINDOW
            for offset, weight in enumerate(power_vector(k, m)):
                if weight:
                    coeffs[base + offset] += coeff * weight
        return cls(k, tuple(coeffs))

    @classmethod
    def from_monomial(cls, k: int, monomial: Monomial) -> "LaurentScalar":
        return cls.from_terms(k, [(monomial.coeff, monomial.a, monomial.m)])

    @classmethod
    def from_vector(cls, k: int, vector: Sequence[Rational]) -> "LaurentScalar":
        """Constrói a partir de um vetor canônico (comprimento 32)."""
        if len(vector) != DIM:
            raise ValueError(f"Vetor canônico deve ter {DIM} entradas")
        return cls(k, tuple(Fraction(int(v)) if not isinstance(v, Fraction) else v for v in vector))

    # Acesso

    def iter_terms(self) -> Iterator[Tuple[Fraction, int, int]]:
        """Termos não nulos (c, a, m) em ordem (m, a)."""
        for m in range(M_LOW, M_HIGH + 1):
            for a in range(ZETA_SLOTS):
                coeff = self.coeffs[slot(a, m)]
                if coeff:
                    yield coeff, a, m

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return {(a, m): coeff for coeff, a, m in self.iter_terms()}

    @property
    def term_count(self) -> int:
        return sum(1 for coeff in self.coeffs if coeff)

    def is_canonical_zero(self) -> bool:
        return not any(self.coeffs)

    def to_monomial(self) -> Optional[Monomial]:
        """Monômio equivalente se houver exatamente um termo."""
        terms = list(self.iter_terms())
        if len(terms) != 1:
            return None
        coeff, a, m = terms[0]
        return Monomial(coeff, a, m)

    def canonical(self) -> "LaurentScalar":
        """Recanonicaliza (idempotente)."""
        return LaurentScalar.from_terms(self.k, self.iter_terms())

    # Aritmética

    def _check_k(self, other: "LaurentScalar"):
        if other.k != self.k:
            raise ValueError(f"Escalares com k diferentes: {self.k} e {other.k}")

    def _coerce(self, other) -> Optional["LaurentScalar"]:
        if isinstance(other, LaurentScalar):
            self._check_k(other)
            return other
        if isinstance(other, Monomial):
            return LaurentScalar.from_monomial(self.k, other)
        if isinstance(other, (int, Fraction)):
            return LaurentScalar.from_int(self.k, other)
        return None

    def __add__(self, other) -> "LaurentScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentScalar(self.k, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(self.k, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "LaurentScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentScalar(self.k, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "LaurentScalar":
        return (-self) + other

    def __mul__(self, other) -> "LaurentScalar":
        if isinstance(other, (int, Fraction)):
            return LaurentScalar(self.k, tuple(x * other for x in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        left = list(self.iter_terms())
        right = list(other.iter_terms())
        return LaurentScalar.from_terms(
            self.k,
            ((c1 * c2, a1 + a2, m1 + m2) for c1, a1, m1 in left for c2, a2, m2 in right),
        )

    __rmul__ = __mul__

    def conj(self, inverts_u: bool) -> "LaurentScalar":
        """
        Conjugação complexa coerente com a raiz escolhida.

        Args:
            inverts_u: True se |u| = 1; False se u é real (u fixo)
        """
        return LaurentScalar.from_terms(
            self.k,
            ((coeff, -a, -m if inverts_u else m) for coeff, a, m in self.iter_terms()),
        )

    def inverse(self) -> "LaurentScalar":
        """
        Inverso de um escalar de um único termo.

        Raises:
            DivisionByZero: Se o escalar for nulo
            NonInvertible: Se houver mais de um termo
        """
        if self.is_canonical_zero():
            raise DivisionByZero("Inversão de escalar nulo")
        monomial = self.to_monomial()
        if monomial is None:
            raise NonInvertible(
                "Inversão de escalar de Laurent geral não suportada", terms=self.term_count
            )
        return LaurentScalar.from_monomial(self.k, monomial.inverse())

    # Avaliação e serialização

    def evaluate(self, u, precision: int):
        """
        Avalia numericamente em u com ``precision`` dígitos.

        Args:
            u: Valor de u (mpf/mpc ou número Python)
            precision: Dígitos decimais

        Returns:
            Valor mpc
        """
        with mp.workdps(precision + 10):
            u_value = mp.mpmathify(u)
            total = mp.mpc(0)
            for coeff, a, m in self.iter_terms():
                total += (
                    mp.mpf(coeff.numerator) / coeff.denominator
                    * mp.expjpi(mp.mpf(a) / 4)
                    * u_value ** m
                )
            return +total

    def __str__(self) -> str:
        if self.is_canonical_zero():
            return "0"
        return "+".join(format_term(coeff, a, m) for coeff, a, m in self.iter_terms())

    def __repr__(self) -> str:
        return f"LaurentScalar(k={self.k}, {self})"


def parse_scalar(text: str, k: int) -> LaurentScalar:
    """
    Lê a serialização 'c*z8^a*u^m+...' (ou '0').

    Args:
        text: Texto serializado
        k: Ordem do contexto

    Returns:
        Escalar canônico

    Raises:
        ParseError: Se algum termo estiver mal formado
    """
    text = text.strip()
    if text == "0":
        return LaurentScalar.zero(k)

    terms = []
    column = 1
    for raw in text.split("+"):
        parts = raw.split("*")
        try:
            if len(parts) != 3 or not parts[1].startswith("z8^") or not parts[2].startswith("u^"):
                raise ValueError(raw)
            terms.append((Fraction(parts[0]), int(parts[1][3:]), int(parts[2][2:])))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"Termo inválido: '{raw}'", line=1, column=column)
        column += len(raw) + 1
    return LaurentScalar.from_terms(k, terms)


# Operações genéricas sobre Scalar = Monomial | LaurentScalar

def as_laurent(x: Scalar, k: int) -> LaurentScalar:
    """Converte qualquer escalar para a forma canônica de Laurent."""
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, Monomial):
        return LaurentScalar.from_monomial(k, x)
    if isinstance(x, (int, Fraction)):
        return LaurentScalar.from_int(k, x)
    raise TypeError(f"Escalar não suportado: {type(x).__name__}")


def scalar_add(x: Scalar, y: Scalar, k: int) -> LaurentScalar:
    return as_laurent(x, k) + as_laurent(y, k)


def scalar_mul(x: Scalar, y: Scalar, k: int) -> Scalar:
    """Produto; monômio × monômio continua monômio."""
    if isinstance(x, Monomial) and isinstance(y, Monomial):
        return x * y
    return as_laurent(x, k) * as_laurent(y, k)


def scalar_conj(x: Scalar, inverts_u: bool) -> Scalar:
    return x.conj(inverts_u)


def scalar_inv(x: Scalar) -> Scalar:
    """
    Inverso exato.

    Raises:
        DivisionByZero: Escalar nulo
        NonInvertible: Escalar de Laurent com mais de um termo
    """
    return x.inverse()


def scalar_equal(x: Scalar, y: Scalar, k: int) -> bool:
    """Igualdade de formas canônicas."""
    return as_laurent(x, k) == as_laurent(y, k)
