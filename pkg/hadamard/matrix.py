"""
Matrizes de Hadamard
====================

Construção (Sylvester e Paley I), validação exata H·Hᵀ = k·I e
leitura/escrita no formato texto '+/-'.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from config import get_settings
from utils.exceptions import BadPrime, ParseError, SizeLimit
from utils.helpers import is_prime
from utils.logger import setup_logger
from utils.reports import VerificationReport

logger = setup_logger(__name__)

DATA_DIR = Path(__file__).parent / "data"
SIGN_CHARS = {"+": 1, "-": -1}


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """
    Matriz quadrada de sinais ±1.

    Attributes:
        signs: Array inteiro k×k (somente leitura)
        source: Origem ('sylvester(2)', 'paley1(11)', caminho do arquivo)
    """

    signs: np.ndarray
    source: str = "manual"

    def __post_init__(self):
        signs = np.array(self.signs, dtype=np.int64)
        if signs.ndim != 2 or signs.shape[0] != signs.shape[1]:
            raise ValueError(f"Matriz de Hadamard deve ser quadrada, recebido {signs.shape}")
        if not np.isin(signs, (-1, 1)).all():
            raise ValueError("Entradas devem ser +1 ou -1")
        signs.setflags(write=False)
        object.__setattr__(self, "signs", signs)

    @property
    def k(self) -> int:
        return int(self.signs.shape[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, HadamardMatrix) and np.array_equal(self.signs, other.signs)

    __hash__ = None

    def flipped(self, row: int, column: int) -> "HadamardMatrix":
        """Cópia com um sinal trocado (útil para testar a validação)."""
        signs = self.signs.copy()
        signs[row, column] *= -1
        return HadamardMatrix(signs, f"{self.source}+flip({row},{column})")


def sylvester(m: int, max_order: Optional[int] = None) -> HadamardMatrix:
    """
    Construção de Sylvester: H_{2^m} = H₂ ⊗ H_{2^(m−1)}.

    Args:
        m: Expoente (ordem 2^m)
        max_order: Limite de ordem (padrão: configurações)

    Returns:
        HadamardMatrix de ordem 2^m

    Raises:
        SizeLimit: Se 2^m exceder o limite
    """
    if m < 0:
        raise ValueError("m deve ser não negativo")
    max_order = max_order or get_settings().max_sylvester_order
    if 2 ** m > max_order:
        raise SizeLimit(f"Ordem 2^{m} acima do limite", order=2 ** m, limit=max_order)

    h2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    signs = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        signs = np.kron(h2, signs)

    logger.debug(f"Sylvester: ordem {2 ** m}")
    return HadamardMatrix(signs, f"sylvester({m})")


def legendre(value: int, q: int) -> int:
    """Símbolo de Legendre χ(value) módulo o primo q."""
    value %= q
    if value == 0:
        return 0
    return 1 if pow(value, (q - 1) // 2, q) == 1 else -1


def paley1(q: int) -> HadamardMatrix:
    """
    Construção de Paley I (tipo antissimétrico) de ordem q + 1.

    H = I + S com S = [[0, 1ᵀ], [−1, Q]] e Q_ij = χ(j − i).

    Args:
        q: Primo com q ≡ 3 (mod 4)

    Returns:
        HadamardMatrix de ordem q + 1

    Raises:
        BadPrime: Se q não for primo ou q ≢ 3 (mod 4)
    """
    if not is_prime(q) or q % 4 != 3:
        raise BadPrime(f"Paley I exige primo q ≡ 3 (mod 4), recebido {q}", q=q)

    chi = np.array([legendre(d, q) for d in range(q)], dtype=np.int64)
    offsets = (np.arange(q)[None, :] - np.arange(q)[:, None]) % q
    jacobsthal = chi[offsets]

    skew = np.zeros((q + 1, q + 1), dtype=np.int64)
    skew[0, 1:] = 1
    skew[1:, 0] = -1
    skew[1:, 1:] = jacobsthal

    logger.debug(f"Paley I: ordem {q + 1}")
    return HadamardMatrix(np.eye(q + 1, dtype=np.int64) + skew, f"paley1({q})")


def validate(matrix: Union[HadamardMatrix, np.ndarray]) -> VerificationReport:
    """
    Verifica H·Hᵀ = k·I exatamente sobre os inteiros.

    Args:
        matrix: HadamardMatrix ou array quadrado de ±1

    Returns:
        VerificationReport (pass se e somente se H·Hᵀ = k·I)
    """
    signs = matrix.signs if isinstance(matrix, HadamardMatrix) else np.asarray(matrix, dtype=np.int64)
    source = matrix.source if isinstance(matrix, HadamardMatrix) else "array"
    k = int(signs.shape[0])
    fields = {"k": k, "parameters": {"source": source}}

    if signs.ndim != 2 or signs.shape[0] != signs.shape[1] or not np.isin(signs, (-1, 1)).all():
        return VerificationReport.from_outcome(
            "hadamard.validate", [{"reason": "entradas fora de ±1 ou matriz não quadrada"}],
            error="VerificationFailed", **fields,
        )

    gram = signs @ signs.T
    residual = gram - k * np.eye(k, dtype=np.int64)
    bad = np.argwhere(residual != 0)
    witnesses = []
    if bad.size:
        i, j = (int(v) for v in bad[0])
        witnesses.append({"row": i, "column": j, "value": int(gram[i, j]), "expected": k if i == j else 0})

    report = VerificationReport.from_outcome(
        "hadamard.validate", witnesses, error="VerificationFailed",
        details={"mismatches": int(len(bad))}, **fields,
    )
    logger.debug(f"Validação de Hadamard (k={k}): {report.verdict.value}")
    return report


def parse(text: str, source: str = "texto") -> HadamardMatrix:
    """
    Lê o formato '+/-': uma linha por linha da matriz, '#' inicia comentário.

    Args:
        text: Conteúdo do arquivo
        source: Origem para o relatório

    Returns:
        HadamardMatrix

    Raises:
        ParseError: Caractere inválido, linhas de tamanhos diferentes ou matriz vazia
    """
    rows = []
    width = None
    last_line = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        if raw.startswith("#"):
            continue
        if raw == "":
            raise ParseError("Linha vazia", line=line_number, column=1)
        for column, char in enumerate(raw, start=1):
            if char not in SIGN_CHARS:
                raise ParseError(f"Caractere inválido '{char}'", line=line_number, column=column)
        if width is None:
            width = len(raw)
        elif len(raw) != width:
            raise ParseError(
                f"Linha com {len(raw)} colunas, esperado {width}",
                line=line_number, column=min(len(raw), width) + 1,
            )
        rows.append([SIGN_CHARS[c] for c in raw])

    if not rows:
        raise ParseError("Nenhuma linha de sinais", line=max(1, last_line), column=1)
    if len(rows) != width:
        raise ParseError(
            f"Matriz não quadrada: {len(rows)} linhas e {width} colunas",
            line=last_line, column=1,
        )
    return HadamardMatrix(np.array(rows, dtype=np.int64), source)


def serialize(matrix: HadamardMatrix) -> str:
    """Formato '+/-' canônico (sem comentários, nova linha final)."""
    return "".join(
        "".join("+" if v > 0 else "-" for v in row) + "\n" for row in matrix.signs
    )


def read_hadamard(path: Union[str, Path]) -> HadamardMatrix:
    """Lê uma matriz de Hadamard de arquivo."""
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), source=str(path))


def write_hadamard(matrix: HadamardMatrix, path: Union[str, Path]) -> Path:
    """Grava a matriz no formato '+/-'."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(matrix), encoding="utf-8")
    logger.info(f"Matriz de Hadamard de ordem {matrix.k} salva em {path}")
    return path


def bundled(order: int = 12) -> HadamardMatrix:
    """Matriz incluída no pacote (ordem 12, gerada por paley1(11))."""
    path = DATA_DIR / f"hadamard_{order}.txt"
    if not path.exists():
        raise FileNotFoundError(f"Nenhuma matriz incluída de ordem {order}")
    matrix = read_hadamard(path)
    return HadamardMatrix(matrix.signs, f"bundled({order})")


def generate(order: int, method: str = "sylvester") -> HadamardMatrix:
    """
    Gera uma matriz de ordem dada pelo método escolhido.

    Args:
        order: Ordem k
        method: 'sylvester' (k potência de 2) ou 'paley' (k − 1 primo ≡ 3 mod 4)

    Raises:
        ValueError: Ordem incompatível com o método ou método desconhecido
    """
    method = method.lower()
    if method == "sylvester":
        m = order.bit_length() - 1
        if order < 1 or 2 ** m != order:
            raise ValueError(f"Sylvester exige ordem potência de 2, recebido {order}")
        return sylvester(m)
    if method == "paley":
        return paley1(order - 1)
    raise ValueError(f"Método desconhecido: {method}. Use 'sylvester' ou 'paley'")
