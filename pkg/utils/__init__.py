"""
Módulo de Utilitários
=====================

Este módulo contém funções auxiliares e utilitários
usados em todo o sistema.

Módulos disponíveis:
- helpers: Funções auxiliares e decorators
- logger: Sistema de logging
- exceptions: Hierarquia de exceções
- reports: Relatórios de verificação
"""

from .exceptions import SpinKitError
from .helpers import canonical_json, stopwatch, timed, to_jsonable
from .logger import setup_logger, log_check_result
from .reports import Verdict, VerificationReport

__all__ = [
    "SpinKitError",
    "canonical_json",
    "stopwatch",
    "timed",
    "to_jsonable",
    "setup_logger",
    "log_check_result",
    "Verdict",
    "VerificationReport",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
