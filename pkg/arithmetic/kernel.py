"""
Kernel de Somas Exatas
======================

Somas agrupadas de monômios de coeficiente ±1, vetorizadas com numpy.

Cada termo é empacotado como (a, m) com a em 0..7 (o sinal −1 vira
ζ₈⁴). Um lote de somas é um histograma inteiro (``numpy.bincount``)
sobre os compartimentos do backend, multiplicado pela matriz de
redução do backend. O resultado são vetores canônicos inteiros,
decididos em lote pelo backend.

Autor: Seu Nome
Data: 2025-09-20
"""

from collections import Counter
from typing import Dict, Optional, Tuple

import numpy as np

from utils.exceptions import AmbiguousZero, NonInvertibleEntry
from utils.logger import log_zero_tests, setup_logger
from .backends import BackendFactory, BaseBackend, ZeroVerdict
from .context import ScalarContext
from .laurent import LaurentScalar
from .monomial import HALF_TURN, ZETA_ORDER, Monomial

logger = setup_logger(__name__)

NEGATE = HALF_TURN


def pack_monomial_matrix(entries, allow_zero: bool = False) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Empacota uma matriz de monômios unitários em arrays inteiros.

    Args:
        entries: Sequência de linhas de escalares (Monomial ou LaurentScalar)
        allow_zero: Aceita entradas nulas (marcadas na máscara)

    Returns:
        (a, m, mask): expoentes de ζ₈ em 0..7, expoentes de u e máscara de não nulos

    Raises:
        NonInvertibleEntry: Entrada nula (sem ``allow_zero``) ou não monomial unitária
    """
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    a = np.zeros((rows, cols), dtype=np.int64)
    m = np.zeros((rows, cols), dtype=np.int64)
    mask = np.ones((rows, cols), dtype=bool)

    for i, row in enumerate(entries):
        for j, entry in enumerate(row):
            monomial = entry
            if isinstance(entry, LaurentScalar):
                if entry.is_canonical_zero():
                    if not allow_zero:
                        raise NonInvertibleEntry("Entrada nula", row=i, column=j)
                    mask[i, j] = False
                    continue
                monomial = entry.to_monomial()
            if not isinstance(monomial, Monomial) or not monomial.is_unit_coefficient:
                raise NonInvertibleEntry(
                    "Entrada não é monômio unitário", row=i, column=j, entry=str(entry)
                )
            a[i, j], m[i, j] = monomial.packed()

    return a, m, mask


class ExactSumKernel:
    """
    Somas agrupadas exatas sobre o backend do contexto.

    Attributes:
        ctx: Contexto escalar
        backend: Backend de teste de zero
        counts: Balanço de vereditos desde a criação
    """

    def __init__(self, ctx: ScalarContext, backend: Optional[BaseBackend] = None):
        self.ctx = ctx
        self.backend = backend or BackendFactory.create_backend(ctx)
        self.counts: Counter = Counter()

    @property
    def inverts_u(self) -> bool:
        return self.ctx.u_inverts_under_conj

    def grouped_sums(
        self, a: np.ndarray, m: np.ndarray, groups: np.ndarray, num_groups: int
    ) -> Tuple[np.ndarray, int]:
        """
        Soma os termos ζ₈^a·u^m por grupo.

        Args:
            a: Expoentes de ζ₈ (qualquer inteiro; reduzidos mod 8)
            m: Expoentes de u
            groups: Grupo de cada termo (0..num_groups−1)
            num_groups: Número de grupos

        Returns:
            (vetores canônicos inteiros (num_groups × dim), limite de |m| usado)
        """
        a = np.asarray(a, dtype=np.int64).ravel() % ZETA_ORDER
        m = np.asarray(m, dtype=np.int64).ravel()
        groups = np.asarray(groups, dtype=np.int64).ravel()

        bound = int(np.abs(m).max()) if m.size else 0
        bins = self.backend.bin_count(bound)
        index = groups * bins + self.backend.bin_index(a, m, bound)
        histogram = np.bincount(index, minlength=num_groups * bins).reshape(num_groups, bins)
        vectors = histogram.astype(np.int64) @ self.backend.reduction_matrix(bound)
        return vectors, bound

    def decide(self, a, m, groups, num_groups: int) -> np.ndarray:
        """
        Decide, por grupo, se a soma dos termos é zero.

        Returns:
            Códigos ZeroVerdict (num_groups,)
        """
        if num_groups == 0:
            return np.zeros(0, dtype=np.int8)
        vectors, bound = self.grouped_sums(a, m, groups, num_groups)
        codes = self.backend.decide_vectors(vectors, bound)
        values, counts = np.unique(codes, return_counts=True)
        for value, count in zip(values, counts):
            self.counts[ZeroVerdict(int(value)).name] += int(count)
        return codes

    def conj_terms(self, a: np.ndarray, m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Conjugação termo a termo: a → −a, m → −m (|u| = 1) ou m (u real)."""
        return -a, (-m if self.inverts_u else m)

    def pairing_terms(
        self, left_a: np.ndarray, left_m: np.ndarray, right_a: np.ndarray, right_m: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Termos de ⟨L_g, R_g⟩ = Σ_x L_g(x)·conj(R_g(x)) para cada linha g.

        Args:
            left_a, left_m: Vetores da esquerda (G × n)
            right_a, right_m: Vetores da direita (G × n)

        Returns:
            Arrays (G × n) de expoentes
        """
        conj_a, conj_m = self.conj_terms(right_a, right_m)
        return left_a + conj_a, left_m + conj_m

    def inner_products(
        self, left_a: np.ndarray, left_m: np.ndarray, right_a: np.ndarray, right_m: np.ndarray
    ) -> np.ndarray:
        """
        Vereditos de zero dos produtos hermitianos linha a linha.

        Returns:
            Códigos ZeroVerdict (G,)
        """
        a, m = self.pairing_terms(left_a, left_m, right_a, right_m)
        num_groups, n = a.shape
        groups = np.repeat(np.arange(num_groups), n)
        return self.decide(a, m, groups, num_groups)

    def summary(self, label: str) -> Dict[str, int]:
        """Registra e devolve o balanço de vereditos."""
        counts = dict(self.counts)
        log_zero_tests(label, counts)
        return counts


def raise_if_ambiguous(codes: np.ndarray, label: str, **context):
    """
    Lança AmbiguousZero se algum código for AMBIGUOUS.

    Args:
        codes: Códigos ZeroVerdict
        label: Nome da verificação
        **context: Dados da testemunha (recebem o índice do primeiro caso)
    """
    ambiguous = np.flatnonzero(codes == ZeroVerdict.AMBIGUOUS)
    if ambiguous.size:
        logger.warning(f"Teste de zero ambíguo em {label} ({ambiguous.size} casos)")
        raise AmbiguousZero(
            f"Teste de zero ambíguo em {label}",
            index=int(ambiguous[0]), ambiguous=int(ambiguous.size), **context,
        )
