"""
Módulo de Verificação
=====================

Orquestra as verificações de ponta a ponta e grava relatórios
JSON determinísticos.

Funções disponíveis:
- verify_theorem: N(W) = 𝒜 e N(W′) = 𝒜′ (k ≥ 4)
- verify_sweep: teorema para os 16 pares (ω, ξ)
- verify_remark: comparação com ℤ/4 (k = 1) e ℤ/8 (k = 2)
- verify_all: execução completa de um RunManifest
- report_emit: JSON canônico + tempos em arquivo lateral
"""

from .manifest import CHECK_IDS, RunManifest, default_source
from .runner import (
    CHECK_REGISTRY,
    VerificationRunner,
    error_report,
    exit_code,
    load_hadamard,
    report_emit,
    verify_all,
)
from .theorem import coefficient_distinctness, verify_remark, verify_sweep, verify_theorem

__all__ = [
    "CHECK_IDS",
    "RunManifest",
    "default_source",
    "CHECK_REGISTRY",
    "VerificationRunner",
    "error_report",
    "exit_code",
    "load_hadamard",
    "report_emit",
    "verify_all",
    "coefficient_distinctness",
    "verify_remark",
    "verify_sweep",
    "verify_theorem",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
