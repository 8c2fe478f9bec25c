"""
Funções Utilitárias
==================

Este módulo contém funções auxiliares usadas em todo o sistema.
Inclui decorators de medição, serialização JSON canônica e
pequenas utilidades numéricas.

Autor: Seu Nome
Data: 2025-09-20
"""

import functools
import json
import time
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator, List, Optional

import numpy as np

from .logger import log_performance_metric


def timed(operation: Optional[str] = None, threshold: float = 0.5):
    """
    Decorator que mede a duração de uma função e registra
    a métrica quando ela passa do limiar.

    Args:
        operation: Nome da operação (padrão: nome qualificado da função)
        threshold: Duração mínima (s) para gerar log
    """
    def decorator(func: Callable) -> Callable:
        name = operation or func.__qualname__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                duration = time.perf_counter() - start
                if duration >= threshold:
                    log_performance_metric(name, duration)

        return wrapper

    return decorator


@contextmanager
def stopwatch() -> Iterator[List[float]]:
    """
    Context manager que mede o tempo decorrido.

    Yields:
        Lista de um elemento preenchida com a duração ao sair do bloco
    """
    elapsed = [0.0]
    start = time.perf_counter()
    try:
        yield elapsed
    finally:
        elapsed[0] = time.perf_counter() - start


def to_jsonable(value: Any) -> Any:
    """
    Converte valores (numpy, Fraction, Enum, Path, tuplas) para tipos JSON.

    Args:
        value: Valor arbitrário

    Returns:
        Estrutura composta apenas de dict/list/str/int/float/bool/None
    """
    if isinstance(value, Enum):
        return to_jsonable(value.value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(item) for item in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, "model_dump"):
        return to_jsonable(value.model_dump())
    return value


def canonical_json(data: Any) -> str:
    """
    Serializa em JSON canônico (chaves ordenadas, separadores fixos).

    Args:
        data: Estrutura serializável (após ``to_jsonable``)

    Returns:
        Texto JSON terminado em nova linha
    """
    return json.dumps(
        to_jsonable(data), sort_keys=True, separators=(",", ":"), ensure_ascii=False
    ) + "\n"


def parse_int_list(value: Any) -> List[int]:
    """
    Converte '1,2,4' (ou lista) em lista de inteiros.

    Args:
        value: String separada por vírgula, inteiro ou lista

    Returns:
        Lista de inteiros
    """
    if value is None or value == "":
        return []
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        return [int(part.strip()) for part in value.split(",") if part.strip()]
    return [int(item) for item in value]


def is_prime(n: int) -> bool:
    """
    Verifica primalidade por divisão experimental.

    Args:
        n: Inteiro

    Returns:
        True se n for primo
    """
    if n < 2:
        return False
    for x in range(2, int(n ** 0.5) + 1):
        if n % x == 0:
            return False
    return True


def batch_slices(total: int, size: int) -> Iterator[slice]:
    """
    Divide o intervalo [0, total) em fatias de tamanho ``size``.

    Args:
        total: Quantidade de itens
        size: Tamanho de cada lote

    Yields:
        Fatias consecutivas
    """
    size = max(1, int(size))
    for start in range(0, total, size):
        yield slice(start, min(start + size, total))


def format_duration(seconds: float) -> str:
    """
    Formata duração em texto curto.

    Args:
        seconds: Duração em segundos

    Returns:
        '850 ms', '12.3 s' ou '2 min 05 s'
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60:
        return f"{seconds:.1f} s"
    minutes, rest = divmod(int(round(seconds)), 60)
    return f"{minutes} min {rest:02d} s"
