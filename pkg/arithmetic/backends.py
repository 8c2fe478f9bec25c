"""
Backends do Teste de Zero
=========================

Decisão de zero em três valores (ZERO, NONZERO, AMBIGUOUS) para
escalares e para lotes de vetores canônicos produzidos pelo kernel.

Cada backend define também como termos empacotados ζ₈^a·u^m
(a em 0..7) são agrupados em compartimentos inteiros e reduzidos
à forma canônica por uma matriz inteira.

Autor: Seu Nome
Data: 2025-09-20
"""

from abc import ABC, abstractmethod
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Type

import numpy as np
from mpmath import mp

from utils.exceptions import IncompatibleMode
from utils.logger import setup_logger
from .context import ScalarContext, UModeKind
from .cyclotomic import CycScalar, power_basis, totient
from .laurent import DIM, M_LOW, WINDOW, LaurentScalar, as_laurent, power_vector
from .monomial import HALF_TURN, ZETA_ORDER

logger = setup_logger(__name__)


class ZeroVerdict(IntEnum):
    """Resultado de um teste de zero."""

    ZERO = 0
    NONZERO = 1
    AMBIGUOUS = 2


class BaseBackend(ABC):
    """
    Interface dos backends de teste de zero.

    Subclasses definem o agrupamento de termos (``bin_index``), a
    redução para a forma canônica (``reduction_matrix``) e a decisão
    sobre um vetor canônico (``decide_vector``).
    """

    name = "base"

    def __init__(self, ctx: ScalarContext):
        self.ctx = ctx
        self._verdict_cache: Dict[bytes, ZeroVerdict] = {}

    # Escalares isolados

    @abstractmethod
    def is_zero(self, x) -> ZeroVerdict:
        """Decide se um escalar (Monomial ou LaurentScalar) é zero."""

    @abstractmethod
    def evaluate(self, x):
        """Valor numérico (mpc) de um escalar."""

    # Protocolo do kernel

    @abstractmethod
    def dim(self, bound: int) -> int:
        """Dimensão do vetor canônico."""

    @abstractmethod
    def bin_count(self, bound: int) -> int:
        """Número de compartimentos para |m| ≤ bound."""

    @abstractmethod
    def bin_index(self, a: np.ndarray, m: np.ndarray, bound: int) -> np.ndarray:
        """Compartimento de cada termo ζ₈^a·u^m (a em 0..7)."""

    @abstractmethod
    def reduction_matrix(self, bound: int) -> np.ndarray:
        """Matriz inteira (compartimentos × dim) até a forma canônica."""

    @abstractmethod
    def decide_vector(self, vector: Sequence[int], bound: int) -> ZeroVerdict:
        """Decide um único vetor canônico inteiro."""

    def decide_vectors(self, vectors: np.ndarray, bound: int) -> np.ndarray:
        """
        Decide um lote de vetores canônicos.

        Linhas repetidas são decididas uma vez (cache por conteúdo).

        Args:
            vectors: Matriz (G × dim) de inteiros
            bound: Limite de |m| usado no agrupamento

        Returns:
            Vetor de códigos ZeroVerdict (G,)
        """
        if len(vectors) == 0:
            return np.zeros(0, dtype=np.int8)
        unique, inverse = np.unique(vectors, axis=0, return_inverse=True)
        codes = np.empty(len(unique), dtype=np.int8)
        for i, row in enumerate(unique):
            if not row.any():
                codes[i] = ZeroVerdict.ZERO
                continue
            key = bound.to_bytes(4, "little", signed=True) + row.tobytes()
            verdict = self._verdict_cache.get(key)
            if verdict is None:
                verdict = self.decide_vector(row.tolist(), bound)
                self._verdict_cache[key] = verdict
            codes[i] = verdict
        return codes[np.asarray(inverse).reshape(-1)]

    def _threshold_verdict(self, value, term_count: int) -> ZeroVerdict:
        """NONZERO se |valor| > tolerância·termos; caso contrário AMBIGUOUS."""
        if abs(value) > self.ctx.tolerance * max(1, term_count):
            return ZeroVerdict.NONZERO
        return ZeroVerdict.AMBIGUOUS


class LaurentFamilyBackend(BaseBackend):
    """Base dos backends que reduzem para a forma canônica de Laurent (32 coeficientes)."""

    def dim(self, bound: int) -> int:
        return DIM

    def bin_count(self, bound: int) -> int:
        return ZETA_ORDER * (2 * bound + 1)

    def bin_index(self, a: np.ndarray, m: np.ndarray, bound: int) -> np.ndarray:
        return (a % ZETA_ORDER) * (2 * bound + 1) + (m + bound)

    def reduction_matrix(self, bound: int) -> np.ndarray:
        return _laurent_reduction(self.ctx.k, bound)

    def _basis_values(self) -> List:
        """Valores numéricos de ζ₈^a·u^m na ordem canônica."""
        cache = self.ctx._u_cache
        if "laurent_basis" not in cache:
            u = self.ctx.u_value()
            with mp.workdps(self.ctx.precision + 10):
                cache["laurent_basis"] = [
                    mp.expjpi(mp.mpf(a) / 4) * u ** (j + M_LOW)
                    for a in range(DIM // WINDOW)
                    for j in range(WINDOW)
                ]
        return cache["laurent_basis"]

    def evaluate(self, x):
        x = as_laurent(x, self.ctx.k)
        return self._evaluate_canonical([int(c) if c.denominator == 1 else c for c in x.coeffs])

    def _evaluate_canonical(self, vector: Sequence) -> "mp.mpc":
        basis = self._basis_values()
        with mp.workdps(self.ctx.precision + 10):
            return mp.fsum(
                (mp.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else c) * b
                for c, b in zip(vector, basis)
                if c
            )


@lru_cache(maxsize=None)
def _laurent_reduction(k: int, bound: int) -> np.ndarray:
    width = 2 * bound + 1
    matrix = np.zeros((ZETA_ORDER * width, DIM), dtype=np.int64)
    for a8 in range(ZETA_ORDER):
        sign = -1 if a8 >= HALF_TURN else 1
        base = (a8 % HALF_TURN) * WINDOW
        for m in range(-bound, bound + 1):
            matrix[a8 * width + m + bound, base:base + WINDOW] = np.asarray(
                power_vector(k, m), dtype=np.int64
            ) * sign
    matrix.setflags(write=False)
    return matrix


class LaurentHybridBackend(LaurentFamilyBackend):
    """
    Forma canônica de Laurent com confirmação numérica na raiz real dominante.

    Zero canônico → ZERO (vale para toda raiz da relação). Caso
    contrário avalia em u com ``precision`` dígitos: |valor| acima de
    tolerância·termos → NONZERO. Dentro da faixa de tolerância o
    veredito é AMBIGUOUS, exceto quando u é raiz da unidade conhecida
    (k=4 dá u=1): aí a faixa é resolvida exatamente em Q(ζ_N), pois a
    relação (u⁴ − 1)² não separa os zeros em u = 1.
    """

    name = "laurent_hybrid"

    def __init__(self, ctx: ScalarContext):
        super().__init__(ctx)
        self.numeric_evaluations = 0
        self.exact_resolutions = 0

    def _confirm(self, scalar: LaurentScalar) -> ZeroVerdict:
        self.numeric_evaluations += 1
        verdict = self._threshold_verdict(self.evaluate(scalar), scalar.term_count)
        exact = self.ctx.exact_root
        if verdict == ZeroVerdict.AMBIGUOUS and exact is not None:
            self.exact_resolutions += 1
            cyc = CycScalar.from_laurent(scalar, *exact)
            return ZeroVerdict.ZERO if cyc.is_zero() else ZeroVerdict.NONZERO
        return verdict

    def decide_vector(self, vector: Sequence[int], bound: int) -> ZeroVerdict:
        if not any(vector):
            return ZeroVerdict.ZERO
        return self._confirm(LaurentScalar.from_vector(self.ctx.k, vector))

    def is_zero(self, x) -> ZeroVerdict:
        x = as_laurent(x, self.ctx.k)
        if x.is_canonical_zero():
            return ZeroVerdict.ZERO
        return self._confirm(x)


class NumericBackend(LaurentFamilyBackend):
    """Avaliação numérica pura em u (qualquer modo com u real ou |u| = 1)."""

    name = "numeric"

    def decide_vector(self, vector: Sequence[int], bound: int) -> ZeroVerdict:
        value = self._evaluate_canonical(vector)
        return self._threshold_verdict(value, sum(1 for c in vector if c))

    def is_zero(self, x) -> ZeroVerdict:
        x = as_laurent(x, self.ctx.k)
        if x.is_canonical_zero():
            return ZeroVerdict.ZERO
        return self._threshold_verdict(self.evaluate(x), x.term_count)


class CyclotomicBackend(BaseBackend):
    """
    Teste exato em Q(ζ_N) com u = ζ_N^e (u = 1 usa N = 8, e = 0).

    ZERO se e somente se todos os coeficientes se anulam.
    """

    name = "cyclotomic"

    def __init__(self, ctx: ScalarContext):
        super().__init__(ctx)
        if ctx.exact_root is None or ctx.u_mode.kind not in (UModeKind.UNIT, UModeKind.CYCLOTOMIC):
            raise IncompatibleMode(
                "Backend ciclotômico exige u = 1 ou u ciclotômico", u_mode=str(ctx.u_mode)
            )
        self.modulus, self.u_exponent = ctx.exact_root

    def to_cyclotomic(self, x) -> CycScalar:
        return CycScalar.from_laurent(as_laurent(x, self.ctx.k), self.modulus, self.u_exponent)

    def is_zero(self, x) -> ZeroVerdict:
        return ZeroVerdict.ZERO if self.to_cyclotomic(x).is_zero() else ZeroVerdict.NONZERO

    def evaluate(self, x):
        return self.to_cyclotomic(x).evaluate(self.ctx.precision)

    def dim(self, bound: int) -> int:
        return totient(self.modulus)

    def bin_count(self, bound: int) -> int:
        return self.modulus

    def bin_index(self, a: np.ndarray, m: np.ndarray, bound: int) -> np.ndarray:
        step = self.modulus // ZETA_ORDER
        return (a * step + self.u_exponent * m) % self.modulus

    def reduction_matrix(self, bound: int) -> np.ndarray:
        return _cyclotomic_reduction(self.modulus)

    def decide_vector(self, vector: Sequence[int], bound: int) -> ZeroVerdict:
        return ZeroVerdict.NONZERO if any(vector) else ZeroVerdict.ZERO


@lru_cache(maxsize=None)
def _cyclotomic_reduction(modulus: int) -> np.ndarray:
    matrix = np.array([power_basis(modulus, j) for j in range(modulus)], dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


class BackendFactory:
    """
    Factory para criação de backends de teste de zero.

    Permite criar backends pelo nome (com apelidos) e registrar
    novos backends em tempo de execução.
    """

    _backends: Dict[str, Type[BaseBackend]] = {
        "cyclotomic": CyclotomicBackend,
        "cyc": CyclotomicBackend,
        "exact": CyclotomicBackend,
        "laurent_hybrid": LaurentHybridBackend,
        "hybrid": LaurentHybridBackend,
        "numeric": NumericBackend,
    }

    @classmethod
    def create_backend(cls, ctx: ScalarContext, name: str = None) -> BaseBackend:
        """
        Cria o backend do contexto (ou o indicado por ``name``).

        Args:
            ctx: Contexto escalar validado
            name: Nome ou apelido do backend (padrão: ctx.backend)

        Returns:
            Instância do backend

        Raises:
            ValueError: Se o backend não for suportado
        """
        key = (name or ctx.backend).lower().strip()
        if key not in cls._backends:
            available = ", ".join(cls.get_supported_backends())
            raise ValueError(f"Backend '{key}' não suportado. Disponíveis: {available}")

        backend = cls._backends[key](ctx)
        logger.debug(f"Backend criado: {backend.name} (k={ctx.k}, u={ctx.u_mode})")
        return backend

    @classmethod
    def get_supported_backends(cls) -> List[str]:
        """Nomes de backends suportados (sem apelidos)."""
        return sorted({backend.name for backend in cls._backends.values()})

    @classmethod
    def register_backend(cls, name: str, backend_class: Type[BaseBackend]):
        """
        Registra um novo backend.

        Raises:
            TypeError: Se a classe não herdar de BaseBackend
        """
        if not isinstance(backend_class, type) or not issubclass(backend_class, BaseBackend):
            raise TypeError("Backend deve herdar de BaseBackend")

        cls._backends[name.lower()] = backend_class
        logger.info(f"Backend registrado: {name}")


def is_zero(x, ctx: ScalarContext) -> ZeroVerdict:
    """
    Teste de zero em três valores para um escalar no contexto.

    Args:
        x: Monomial ou LaurentScalar
        ctx: Contexto escalar

    Returns:
        ZeroVerdict
    """
    return BackendFactory.create_backend(ctx).is_zero(x)
