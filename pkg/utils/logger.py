"""
Sistema de Logging
==================

Este módulo configura o sistema de logging usando Loguru.
Fornece logging estruturado com rotação automática e um arquivo
dedicado às verificações (varreduras de pares, relatórios).
Nível do console e diretório vêm de ``config.settings``.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path
from typing import Dict, Optional

from loguru import logger

from config.settings import Settings, get_settings

# Remover handler padrão do loguru
logger.remove()

# Configurar formato de log
LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

VERIFICATION_CHANNELS = ("verify", "nomura", "performance", "zero_tests")


def _verification_filter(record) -> bool:
    channel = str(record["extra"].get("name", ""))
    return any(tag in channel for tag in VERIFICATION_CHANNELS)


def _install_handlers(console_level: str, log_dir: Path) -> None:
    log_dir.mkdir(parents=True, exist_ok=True)

    logger.add(
        sys.stdout,
        format=LOG_FORMAT,
        level=console_level,
        colorize=True,
        backtrace=True,
        diagnose=False,
    )

    logger.add(
        log_dir / "spinkit.log",
        format=LOG_FORMAT,
        level="DEBUG",
        rotation="10 MB",
        retention="30 days",
        compression="zip",
        backtrace=True,
        diagnose=False,
    )

    logger.add(
        log_dir / "errors.log",
        format=LOG_FORMAT,
        level="ERROR",
        rotation="5 MB",
        retention="60 days",
        compression="zip",
        backtrace=True,
        diagnose=False,
    )

    logger.add(
        log_dir / "verification.log",
        format=LOG_FORMAT,
        level="INFO",
        rotation="20 MB",
        retention="15 days",
        compression="zip",
        filter=_verification_filter,
    )


def configure_logging(settings: Optional[Settings] = None) -> None:
    """
    (Re)instala os handlers com ``log_level`` e ``log_dir`` das configurações.

    Args:
        settings: Configurações explícitas; padrão ``get_settings()``
    """
    settings = settings or get_settings()
    logger.remove()
    _install_handlers(settings.log_level, Path(settings.log_dir))


configure_logging()


def setup_logger(name: str):
    """
    Configura logger para um módulo específico.

    Args:
        name: Nome do módulo

    Returns:
        Logger com contexto
    """
    module_logger = logger.bind(name=name)
    module_logger.debug(f"Logger configurado: {name}")
    return module_logger


def log_check_result(check_id: str, k: Optional[int], verdict: str, duration: float):
    """
    Log de resultado de uma verificação.

    Args:
        check_id: Identificador da verificação
        k: Ordem da matriz de Hadamard (se houver)
        verdict: pass, fail ou ambiguous
        duration: Duração em segundos
    """
    verify_logger = logger.bind(name="verify")
    message = f"Verificação '{check_id}' | k={k} | Veredito: {verdict.upper()} | {duration:.2f}s"

    if verdict == "pass":
        verify_logger.info(message)
    elif verdict == "ambiguous":
        verify_logger.warning(message)
    else:
        verify_logger.error(message)


def log_zero_tests(label: str, counts: Dict[str, int]):
    """
    Log do balanço de testes de zero de uma varredura.

    Args:
        label: Nome da varredura
        counts: Contagem por veredito (ZERO, NONZERO, AMBIGUOUS)
    """
    zero_logger = logger.bind(name="zero_tests")
    message = " | ".join(f"{key}: {value}" for key, value in sorted(counts.items()))
    if counts.get("AMBIGUOUS", 0):
        zero_logger.warning(f"Testes de zero em {label} | {message}")
    else:
        zero_logger.debug(f"Testes de zero em {label} | {message}")


def log_performance_metric(operation: str, duration: float, details: Optional[str] = None):
    """
    Log específico para métricas de performance.

    Args:
        operation: Nome da operação
        duration: Duração em segundos
        details: Detalhes adicionais (opcional)
    """
    perf_logger = logger.bind(name="performance")
    message = f"Operação: {operation} | Duração: {duration:.2f}s"
    if details:
        message += f" | Detalhes: {details}"

    perf_logger.info(message)


def log_error_with_context(error: Exception, context: dict):
    """
    Log de erro com contexto adicional.

    Args:
        error: Exceção
        context: Contexto adicional
    """
    error_logger = logger.bind(name="error")
    merged = {**context, **(getattr(error, "context", None) or {})}
    error_logger.error(
        f"Erro: {type(error).__name__}: {error.args[0] if error.args else ''} | Contexto: {merged}"
    )


def configure_log_level(level: str):
    """
    Configura nível de log globalmente.

    Args:
        level: Nível de log (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    configure_logging(get_settings().model_copy(update={"log_level": level.upper()}))
    logger.debug(f"Nível de log configurado para: {level}")

