"""
Contexto Escalar
================

Parâmetros que fixam a aritmética de uma execução: ordem k, escolha
da raiz u, expoentes de ω e ξ, backend do teste de zero, tolerância
e precisão.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from mpmath import mp

from config import get_settings
from utils.exceptions import ConstraintViolation, IncompatibleMode
from utils.logger import setup_logger
from .cyclotomic import CycScalar, check_modulus
from .laurent import LaurentScalar
from .monomial import Monomial

logger = setup_logger(__name__)

BACKENDS = ("cyclotomic", "laurent_hybrid", "numeric")
OMEGA_EXPONENTS = (0, 1, 2, 3)
XI_EXPONENTS = (1, 3, 5, 7)


class UModeKind(str, Enum):
    """Forma de escolher a raiz u."""

    UNIT = "unit"
    CYCLOTOMIC = "cyclotomic"
    REAL_DOMINANT = "real_dominant"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class UMode:
    """
    Escolha de u.

    Attributes:
        kind: unit, cyclotomic, real_dominant ou numeric
        modulus: N (apenas cyclotomic)
        exponent: e (apenas cyclotomic, u = ζ_N^e)
        value: valor numérico (apenas numeric)
    """

    kind: UModeKind
    modulus: Optional[int] = None
    exponent: Optional[int] = None
    value: Optional[complex] = None

    @classmethod
    def unit(cls) -> "UMode":
        return cls(UModeKind.UNIT)

    @classmethod
    def cyclotomic(cls, modulus: int, exponent: int) -> "UMode":
        check_modulus(modulus)
        return cls(UModeKind.CYCLOTOMIC, modulus=modulus, exponent=exponent % modulus)

    @classmethod
    def real_dominant(cls) -> "UMode":
        return cls(UModeKind.REAL_DOMINANT)

    @classmethod
    def numeric(cls, value: complex) -> "UMode":
        return cls(UModeKind.NUMERIC, value=complex(value))

    @classmethod
    def parse(cls, text: str) -> "UMode":
        """
        Lê 'unit', 'real', 'cyc:N:e' ou 'numeric:VALOR'.

        Raises:
            IncompatibleMode: Se o texto não corresponder a nenhum modo
        """
        text = text.strip().lower()
        if text in ("unit", "1"):
            return cls.unit()
        if text in ("real", "real_dominant"):
            return cls.real_dominant()
        parts = text.split(":")
        try:
            if parts[0] in ("cyc", "cyclotomic") and len(parts) == 3:
                return cls.cyclotomic(int(parts[1]), int(parts[2]))
            if parts[0] == "numeric" and len(parts) == 2:
                return cls.numeric(complex(parts[1].replace("i", "j")))
        except ValueError:
            pass
        raise IncompatibleMode(f"Modo de u inválido: '{text}'")

    def __str__(self) -> str:
        if self.kind == UModeKind.CYCLOTOMIC:
            return f"cyc:{self.modulus}:{self.exponent}"
        if self.kind == UModeKind.NUMERIC:
            return f"numeric:{self.value}"
        return self.kind.value


def default_u_mode(k: int) -> UMode:
    """
    Raiz padrão por ordem: exata para k ≤ 4, real dominante acima.

    k=1 → ζ₁₂, k=2 → ζ₁₆, k=3 → ζ₂₄, k=4 → 1.
    """
    defaults = {
        1: UMode.cyclotomic(24, 2),
        2: UMode.cyclotomic(16, 1),
        3: UMode.cyclotomic(24, 1),
        4: UMode.unit(),
    }
    return defaults.get(k, UMode.real_dominant())


def default_backend(mode: UMode) -> str:
    """Backend natural para cada modo de u."""
    if mode.kind in (UModeKind.UNIT, UModeKind.CYCLOTOMIC):
        return "cyclotomic"
    if mode.kind == UModeKind.REAL_DOMINANT:
        return "laurent_hybrid"
    return "numeric"


def dominant_root(k: int, precision: int):
    """
    Raiz real dominante de u⁸ − (k−2)u⁴ + 1 (u ≥ 1).

    Resolve a quadrática em t = u⁴ e toma a raiz quarta positiva.

    Args:
        k: Ordem (k ≥ 4)
        precision: Dígitos decimais

    Returns:
        mpf com u
    """
    if k < 4:
        raise ConstraintViolation("Não há raiz real u ≥ 1 para k < 4", k=k)
    with mp.workdps(precision + 10):
        t = ((k - 2) + mp.sqrt(k * (k - 4))) / 2
        return +mp.root(t, 4)


@dataclass(frozen=True)
class ScalarContext:
    """
    Contexto validado da aritmética (use ``make_context``).

    Attributes:
        k: Ordem da matriz de Hadamard
        u_mode: Escolha de u
        omega: o, com ω = i^o
        xi: e ímpar, com ξ = ζ₈^e
        backend: cyclotomic, laurent_hybrid ou numeric
        tolerance: Limiar numérico de zero
        precision: Dígitos da avaliação numérica
    """

    k: int
    u_mode: UMode
    omega: int
    xi: int
    backend: str
    tolerance: float
    precision: int
    _u_cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False, hash=False)

    @property
    def omega_monomial(self) -> Monomial:
        return Monomial.zeta(2 * self.omega)

    @property
    def xi_monomial(self) -> Monomial:
        return Monomial.zeta(self.xi)

    @property
    def iota(self) -> Monomial:
        """ι = −ξ², a unidade imaginária associada a ξ (ι² = −1)."""
        return Monomial.zeta(2 * self.xi + 4)

    @property
    def u_inverts_under_conj(self) -> bool:
        """True quando conj(u) = u⁻¹ (|u| = 1); False quando u é real."""
        kind = self.u_mode.kind
        if kind in (UModeKind.UNIT, UModeKind.CYCLOTOMIC):
            return True
        if kind == UModeKind.REAL_DOMINANT:
            return False
        return abs(complex(self.u_mode.value).imag) > 0

    @property
    def exact_root(self) -> Optional[Tuple[int, int]]:
        """(N, e) quando u = ζ_N^e exatamente; None caso contrário."""
        kind = self.u_mode.kind
        if kind == UModeKind.UNIT:
            return (8, 0)
        if kind == UModeKind.CYCLOTOMIC:
            return (self.u_mode.modulus, self.u_mode.exponent)
        if kind == UModeKind.REAL_DOMINANT and self.k == 4:
            return (8, 0)
        return None

    def u_value(self):
        """Valor numérico de u (mpf/mpc) na precisão do contexto."""
        if "u" not in self._u_cache:
            kind = self.u_mode.kind
            with mp.workdps(self.precision + 10):
                if kind == UModeKind.UNIT:
                    value = mp.mpf(1)
                elif kind == UModeKind.CYCLOTOMIC:
                    value = mp.expjpi(mp.mpf(2 * self.u_mode.exponent) / self.u_mode.modulus)
                elif kind == UModeKind.REAL_DOMINANT:
                    value = dominant_root(self.k, self.precision)
                else:
                    value = mp.mpmathify(self.u_mode.value)
            self._u_cache["u"] = value
        return self._u_cache["u"]

    def loop_scalar(self) -> LaurentScalar:
        """u² + u⁻², cujo quadrado é k."""
        return LaurentScalar.from_terms(self.k, [(1, 0, 2), (1, 0, -2)])

    @property
    def parameters(self) -> Dict[str, Any]:
        """Parâmetros para relatórios."""
        return {
            "k": self.k,
            "u_mode": str(self.u_mode),
            "omega": self.omega,
            "xi": self.xi,
            "backend": self.backend,
            "tolerance": self.tolerance,
            "precision": self.precision,
        }

    def with_parameters(self, **changes) -> "ScalarContext":
        """Novo contexto validado com parâmetros alterados."""
        values = {
            "k": self.k,
            "u_mode": self.u_mode,
            "omega": self.omega,
            "xi": self.xi,
            "backend": self.backend,
            "tolerance": self.tolerance,
            "precision": self.precision,
        }
        values.update(changes)
        return make_context(**values)


def _check_constraint(k: int, mode: UMode, tolerance: float, precision: int):
    """Valida (u² + u⁻²)² = k para o modo escolhido."""
    kind = mode.kind
    if kind == UModeKind.UNIT:
        if k != 4:
            raise ConstraintViolation(
                "u = 1 exige k = 4 ((1 + 1)² = 4)", k=k, u_mode=str(mode)
            )
        return

    if kind == UModeKind.CYCLOTOMIC:
        modulus, exponent = mode.modulus, mode.exponent
        loop = CycScalar.from_terms(modulus, [(1, 2 * exponent), (1, -2 * exponent)])
        residual = loop * loop - CycScalar.from_exponent(modulus, 0, k)
        if not residual.is_zero():
            raise ConstraintViolation(
                "(u² + u⁻²)² ≠ k para a raiz ciclotômica escolhida", k=k, u_mode=str(mode)
            )
        return

    if kind == UModeKind.REAL_DOMINANT:
        # Exata no anel quociente; só falta existir a raiz real
        dominant_root(k, precision)
        return

    value = complex(mode.value)
    if value == 0:
        raise ConstraintViolation("u = 0 não é invertível", k=k)
    if abs(value.imag) > tolerance and abs(abs(value) - 1) > tolerance:
        raise IncompatibleMode(
            "Modo numérico exige u real ou de módulo 1", u_mode=str(mode)
        )
    with mp.workdps(precision + 10):
        u = mp.mpmathify(value)
        residual = abs((u ** 2 + u ** -2) ** 2 - k)
    if residual > tolerance:
        raise ConstraintViolation(
            "(u² + u⁻²)² ≠ k dentro da tolerância", k=k, residual=float(residual)
        )


def make_context(
    k: int,
    u_mode: Union[UMode, str, None] = None,
    omega: Optional[int] = None,
    xi: Optional[int] = None,
    backend: Optional[str] = None,
    tolerance: Optional[float] = None,
    precision: Optional[int] = None,
) -> ScalarContext:
    """
    Cria e valida um contexto escalar.

    Argumentos ausentes vêm das configurações (``config.get_settings``)
    ou dos padrões por ordem (``default_u_mode``).

    Args:
        k: Ordem da matriz de Hadamard (k ≥ 1)
        u_mode: Modo de u (objeto ou texto 'unit', 'real', 'cyc:N:e')
        omega: o ∈ {0,1,2,3} (ω = i^o)
        xi: e ∈ {1,3,5,7} (ξ = ζ₈^e)
        backend: cyclotomic, laurent_hybrid ou numeric
        tolerance: Limiar numérico de zero
        precision: Dígitos da avaliação numérica

    Returns:
        ScalarContext validado

    Raises:
        ConstraintViolation: Restrição sobre u, ω ou ξ violada
        IncompatibleMode: Backend não representa o modo de u
    """
    settings = get_settings()

    if not isinstance(k, int) or k < 1:
        raise ConstraintViolation("k deve ser inteiro positivo", k=k)

    if u_mode is None:
        mode = default_u_mode(k)
    elif isinstance(u_mode, str):
        mode = UMode.parse(u_mode)
    else:
        mode = u_mode

    omega = settings.default_omega if omega is None else omega
    xi = settings.default_xi if xi is None else xi
    tolerance = settings.tolerance if tolerance is None else float(tolerance)
    precision = settings.precision if precision is None else int(precision)
    backend = backend or settings.default_backend or default_backend(mode)

    if omega not in OMEGA_EXPONENTS:
        raise ConstraintViolation("ω deve ser raiz quarta da unidade (o ∈ 0..3)", omega=omega)
    if xi not in XI_EXPONENTS:
        raise ConstraintViolation("ξ deve ser raiz oitava primitiva (ξ⁴ = −1)", xi=xi)
    if tolerance < 0:
        raise ConstraintViolation("Tolerância deve ser não negativa", tolerance=tolerance)

    if backend not in BACKENDS:
        raise IncompatibleMode(f"Backend desconhecido: {backend}", backends=list(BACKENDS))
    if backend == "cyclotomic" and mode.kind not in (UModeKind.UNIT, UModeKind.CYCLOTOMIC):
        raise IncompatibleMode(
            "Backend ciclotômico exige u = 1 ou u ciclotômico", u_mode=str(mode)
        )
    if backend == "laurent_hybrid" and mode.kind != UModeKind.REAL_DOMINANT:
        raise IncompatibleMode(
            "Backend laurent_hybrid exige a raiz real dominante", u_mode=str(mode)
        )

    _check_constraint(k, mode, tolerance, precision)

    ctx = ScalarContext(
        k=k, u_mode=mode, omega=omega, xi=xi, backend=backend,
        tolerance=tolerance, precision=precision,
    )
    logger.debug(f"Contexto criado: {ctx.parameters}")
    return ctx
