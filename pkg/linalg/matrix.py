"""
Matrizes de Spin
================

Matrizes densas e vetores sobre escalares exatos (Monomial ou
LaurentScalar), montagem por blocos 4×4 e o produto hermitiano.

Autor: Seu Nome
Data: 2025-09-20
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from arithmetic import LaurentScalar, Monomial, Scalar, as_laurent, parse_scalar
from utils.exceptions import ShapeMismatch
from utils.logger import setup_logger

logger = setup_logger(__name__)


def is_zero_entry(x: Scalar) -> bool:
    return isinstance(x, LaurentScalar) and x.is_canonical_zero()


def normalize_scalar(x: Scalar) -> Scalar:
    """Escalar de Laurent de um único termo vira Monomial."""
    if isinstance(x, LaurentScalar):
        monomial = x.to_monomial()
        if monomial is not None:
            return monomial
    return x


def sum_scalars(values: Iterable[Scalar], k: int) -> Scalar:
    """Soma exata; um único termo continua Monomial."""
    values = [v for v in values if not is_zero_entry(v)]
    if not values:
        return LaurentScalar.zero(k)
    if len(values) == 1:
        return values[0]
    terms = []
    for value in values:
        if isinstance(value, Monomial):
            terms.append((value.coeff, value.a, value.m))
        else:
            terms.extend(value.iter_terms())
    return normalize_scalar(LaurentScalar.from_terms(k, terms))


def multiply_scalars(x: Scalar, y: Scalar, k: int) -> Scalar:
    if isinstance(x, Monomial) and isinstance(y, Monomial):
        return x * y
    return normalize_scalar(as_laurent(x, k) * as_laurent(y, k))


def _coerce_entry(value, k: int) -> Scalar:
    if isinstance(value, (Monomial, LaurentScalar)):
        return value
    if isinstance(value, (int, np.integer, Fraction)):
        value = Fraction(value)
        return Monomial(value, 0, 0) if value else LaurentScalar.zero(k)
    raise TypeError(f"Entrada não suportada: {type(value).__name__}")


@dataclass(frozen=True)
class ColumnVector:
    """Vetor coluna de escalares."""

    entries: Tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> Scalar:
        return self.entries[index]

    @classmethod
    def ones(cls, n: int) -> "ColumnVector":
        return cls(tuple(Monomial.one() for _ in range(n)))


@dataclass(frozen=True, eq=False)
class SpinMatrix:
    """
    Matriz quadrada densa sobre escalares exatos.

    Attributes:
        k: Ordem que fixa a relação de redução dos escalares
        entries: Linhas de escalares
        label: Proveniência opcional (ex.: 'W', 'A1')
    """

    k: int
    entries: Tuple[Tuple[Scalar, ...], ...]
    label: Optional[str] = None

    def __post_init__(self):
        rows = tuple(tuple(_coerce_entry(v, self.k) for v in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ShapeMismatch("Matriz não quadrada", rows=n)
        object.__setattr__(self, "entries", rows)

    # Construtores

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], k: int, label: Optional[str] = None) -> "SpinMatrix":
        return cls(k, tuple(tuple(row) for row in rows), label)

    @classmethod
    def from_integers(cls, array, k: int, label: Optional[str] = None) -> "SpinMatrix":
        """Matriz inteira (ex.: relação 0/1) como SpinMatrix."""
        array = np.asarray(array, dtype=np.int64)
        return cls(k, tuple(tuple(int(v) for v in row) for row in array), label)

    @classmethod
    def identity(cls, n: int, k: int) -> "SpinMatrix":
        return cls.from_integers(np.eye(n, dtype=np.int64), k, "I")

    @classmethod
    def zeros(cls, n: int, k: int) -> "SpinMatrix":
        return cls.from_integers(np.zeros((n, n), dtype=np.int64), k)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar], k: int, label: Optional[str] = None) -> "SpinMatrix":
        n = len(values)
        zero = LaurentScalar.zero(k)
        rows = [[values[i] if i == j else zero for j in range(n)] for i in range(n)]
        return cls.from_rows(rows, k, label)

    # Acesso

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, position: Tuple[int, int]) -> Scalar:
        i, j = position
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> ColumnVector:
        return ColumnVector(tuple(row[j] for row in self.entries))

    def block(self, r: int, c: int) -> "SpinMatrix":
        """Bloco (r, c) da divisão 4×4 (lado n/4)."""
        if self.n % 4:
            raise ShapeMismatch("Lado não divisível por 4", n=self.n)
        size = self.n // 4
        rows = [row[c * size:(c + 1) * size] for row in self.entries[r * size:(r + 1) * size]]
        return SpinMatrix.from_rows(rows, self.k)

    def support(self) -> np.ndarray:
        """Máscara booleana das entradas não nulas."""
        return np.array([[not is_zero_entry(v) for v in row] for row in self.entries], dtype=bool)

    def is_monomial(self) -> bool:
        return all(isinstance(v, Monomial) for row in self.entries for v in row)

    # Operações

    def transpose(self) -> "SpinMatrix":
        label = f"{self.label}^T" if self.label else None
        return SpinMatrix(self.k, tuple(zip(*self.entries)), label)

    def conj_transpose(self, inverts_u: bool = True) -> "SpinMatrix":
        rows = [[v.conj(inverts_u) for v in row] for row in zip(*self.entries)]
        label = f"{self.label}^*" if self.label else None
        return SpinMatrix.from_rows(rows, self.k, label)

    def scaled(self, factor: Scalar) -> "SpinMatrix":
        rows = [
            [v if is_zero_entry(v) else multiply_scalars(factor, v, self.k) for v in row]
            for row in self.entries
        ]
        return SpinMatrix.from_rows(rows, self.k, self.label)

    def first_mismatch(self, other: "SpinMatrix") -> Optional[Tuple[int, int]]:
        """Primeira entrada (ordem de linhas) com formas canônicas diferentes."""
        if self.n != other.n:
            raise ShapeMismatch("Lados diferentes", left=self.n, right=other.n)
        for i, (left, right) in enumerate(zip(self.entries, other.entries)):
            for j, (x, y) in enumerate(zip(left, right)):
                if x != y and as_laurent(x, self.k) != as_laurent(y, self.k):
                    return (i, j)
        return None

    def equals(self, other: "SpinMatrix") -> bool:
        """Igualdade entrada a entrada das formas canônicas."""
        return self.n == other.n and self.first_mismatch(other) is None

    def __eq__(self, other) -> bool:
        return isinstance(other, SpinMatrix) and self.equals(other)

    __hash__ = None

    def equal_support(self, other: "SpinMatrix") -> bool:
        """Igualdade como padrões 0/1."""
        return self.n == other.n and bool(np.array_equal(self.support(), other.support()))

    def to_dict(self) -> dict:
        """Formato de exportação {n, rows}."""
        return {"n": self.n, "rows": [[str(v) for v in row] for row in self.entries]}

    @classmethod
    def from_dict(cls, data: dict, k: int, label: Optional[str] = None) -> "SpinMatrix":
        rows = [[normalize_scalar(parse_scalar(text, k)) for text in row] for row in data["rows"]]
        if len(rows) != int(data["n"]):
            raise ShapeMismatch("Campo n não confere com as linhas", n=data["n"], rows=len(rows))
        return cls.from_rows(rows, k, label)


def block4(blocks: Sequence[Sequence[Union[SpinMatrix, None]]], k: int, label: Optional[str] = None) -> SpinMatrix:
    """
    Monta uma matriz 4k×4k a partir de uma grade 4×4 de blocos k×k.

    Args:
        blocks: Grade 4×4; None significa bloco nulo
        k: Lado dos blocos
        label: Rótulo da matriz

    Returns:
        SpinMatrix de lado 4k

    Raises:
        ShapeMismatch: Grade que não é 4×4 ou bloco com lado ≠ k
    """
    if len(blocks) != 4 or any(len(row) != 4 for row in blocks):
        raise ShapeMismatch("A grade de blocos deve ser 4×4")
    zero = LaurentScalar.zero(k)
    rows: List[List[Scalar]] = [[] for _ in range(4 * k)]
    for r, block_row in enumerate(blocks):
        for c, block in enumerate(block_row):
            if block is not None and block.n != k:
                raise ShapeMismatch("Bloco com lado diferente de k", block=(r, c), n=block.n, k=k)
            for i in range(k):
                rows[r * k + i].extend(block.entries[i] if block is not None else [zero] * k)
    return SpinMatrix.from_rows(rows, k, label)


def matmul(left: SpinMatrix, right: SpinMatrix) -> SpinMatrix:
    """
    Produto exato (entradas nulas são puladas).

    Raises:
        ShapeMismatch: Lados diferentes
    """
    if left.n != right.n:
        raise ShapeMismatch("Produto com lados diferentes", left=left.n, right=right.n)
    k = left.k
    n = left.n
    row_support = [[(j, v) for j, v in enumerate(row) if not is_zero_entry(v)] for row in left.entries]
    column_support = [
        {i: right.entries[i][j] for i in range(n) if not is_zero_entry(right.entries[i][j])}
        for j in range(n)
    ]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            column = column_support[j]
            products = [multiply_scalars(v, column[t], k) for t, v in row_support[i] if t in column]
            row.append(sum_scalars(products, k))
        rows.append(row)
    return SpinMatrix.from_rows(rows, k)


def lincomb(coeffs: Sequence[Scalar], matrices: Sequence, k: int, label: Optional[str] = None) -> SpinMatrix:
    """
    Combinação linear Σ c_i·M_i.

    Args:
        coeffs: Escalares c_i
        matrices: SpinMatrix ou arrays inteiros (ex.: relações 0/1)
        k: Ordem do contexto
        label: Rótulo do resultado

    Raises:
        ShapeMismatch: Quantidades ou lados incompatíveis
    """
    if len(coeffs) != len(matrices) or not matrices:
        raise ShapeMismatch("Coeficientes e matrizes em quantidades diferentes")
    spins = [m if isinstance(m, SpinMatrix) else SpinMatrix.from_integers(m, k) for m in matrices]
    n = spins[0].n
    if any(m.n != n for m in spins):
        raise ShapeMismatch("Matrizes com lados diferentes")

    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = [
                multiply_scalars(c, m.entries[i][j], k)
                for c, m in zip(coeffs, spins)
                if not is_zero_entry(m.entries[i][j])
            ]
            row.append(sum_scalars(terms, k))
        rows.append(row)
    return SpinMatrix.from_rows(rows, k, label)


def hermitian_ip(left: ColumnVector, right: ColumnVector, k: int, inverts_u: bool = True) -> Scalar:
    """
    Produto hermitiano Σ_x T(x)·conj(T′(x)).

    Args:
        left: T
        right: T′
        k: Ordem do contexto
        inverts_u: Convenção de conjugação de u (ver ScalarContext)

    Raises:
        ShapeMismatch: Comprimentos diferentes
    """
    if len(left) != len(right):
        raise ShapeMismatch("Vetores de comprimentos diferentes", left=len(left), right=len(right))
    products = [
        multiply_scalars(x, y.conj(inverts_u), k)
        for x, y in zip(left.entries, right.entries)
        if not is_zero_entry(x) and not is_zero_entry(y)
    ]
    return as_laurent(sum_scalars(products, k), k)


def dump_matrix(matrix: SpinMatrix, path: Union[str, Path]) -> Path:
    """Grava a matriz no formato JSON {n, rows}."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(matrix.to_dict(), ensure_ascii=False) + "\n", encoding="utf-8")
    logger.info(f"Matriz {matrix.label or ''} ({matrix.n}×{matrix.n}) salva em {path}")
    return path


def load_matrix(path: Union[str, Path], k: int, label: Optional[str] = None) -> SpinMatrix:
    """Lê uma matriz no formato JSON {n, rows}."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return SpinMatrix.from_dict(data, k, label)
