"""
Módulo de Nomura
================

Álgebras de Nomura pelo método das componentes conexas, com um
teste de pertinência independente (definição por autovetores) e as
verificações dos lemas auxiliares.

Funções disponíveis:
- y_table: vetores Y_ab
- nomura_graph / nomura_algebra: partição dos pares e base
- membership_test: A ∈ N(M) pela definição
- lemma_checks: lemas 2 a 5 e arestas
"""

from .graph import NomuraResult, PairPartition, nomura_algebra, nomura_graph
from .lemmas import (
    edges_check,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    lemma5_check,
    lemma_checks,
)
from .membership import membership_test
from .union_find import UnionFind
from .ytable import YTable, y_table

__all__ = [
    "NomuraResult",
    "PairPartition",
    "nomura_algebra",
    "nomura_graph",
    "edges_check",
    "lemma2_check",
    "lemma3_check",
    "lemma4_check",
    "lemma5_check",
    "lemma_checks",
    "membership_test",
    "UnionFind",
    "YTable",
    "y_table",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
