"""
Configuração dos Testes
=======================

Marcadores, opções de linha de comando e fixtures compartilhadas.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path

import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import make_context
from hadamard import sylvester


def pytest_configure(config):
    """Configuração do pytest."""
    config.addinivalue_line(
        "markers", "slow: marca testes lentos (k = 8, k = 12)"
    )


def pytest_addoption(parser):
    """Adiciona opções ao pytest."""
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="Executar testes lentos"
    )


def pytest_collection_modifyitems(config, items):
    """Pula testes lentos por padrão."""
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="Teste lento desabilitado (use --slow)")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def h4():
    """Sylvester de ordem 4."""
    return sylvester(2)


@pytest.fixture
def h8():
    """Sylvester de ordem 8."""
    return sylvester(3)


@pytest.fixture
def ctx4():
    """Contexto exato em k = 4 (u = 1, ω = 1, ξ = ζ₈)."""
    return make_context(4, omega=0, xi=1)


@pytest.fixture
def hybrid4():
    """Contexto híbrido em k = 4 (raiz real dominante, que vale 1)."""
    return make_context(4, u_mode="real", omega=0, xi=1, backend="laurent_hybrid")


@pytest.fixture(autouse=True)
def quiet_progress(monkeypatch):
    """Desliga barras de progresso nos testes."""
    from config import get_settings

    monkeypatch.setattr(get_settings(), "show_progress", False)
