"""
Testes para Nomura
==================

Testes do union-find, da tabela Y, do grafo de Nomura, do teste
de pertinência e das verificações de lemas.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import make_context
from arithmetic.backends import LaurentHybridBackend
from hadamard import sylvester
from models import build_model
from nomura import (
    PairPartition,
    UnionFind,
    lemma_checks,
    membership_test,
    nomura_algebra,
    nomura_graph,
    y_table,
)
from schemes import build_relations, scheme_family
from utils.reports import Verdict


class TestUnionFind:
    """
    Testes para UnionFind.
    """

    def test_union_and_find(self):
        """Testa fusão com raiz no menor elemento."""
        components = UnionFind(6)
        assert components.union(3, 1)
        assert components.union(5, 3)
        assert not components.union(1, 5)
        assert components.find(5) == 1
        assert components.connected(1, 5)
        assert components.num_components == 4

    def test_components(self):
        """Testa componentes ordenadas pela raiz."""
        components = UnionFind(5)
        components.union(0, 4)
        components.union(2, 3)
        groups = [list(c) for c in components.components()]
        assert groups == [[0, 4], [1], [2, 3]]
        assert list(components.roots()) == [0, 1, 2, 2, 0]


class TestPairPartition:
    """
    Testes para PairPartition.
    """

    def test_from_matrices(self):
        """Testa rótulos canônicos a partir de matrizes 0/1."""
        eye = np.eye(2, dtype=np.int64)
        partition = PairPartition.from_matrices([eye, 1 - eye])
        assert list(partition.labels) == [0, 1, 1, 0]
        assert partition.count == 2
        assert partition.sizes() == [2, 2]
        assert partition.diagonal_in_one_class()
        assert partition.same_family([1 - eye, eye])

    def test_not_a_partition(self):
        """Testa erro para suportes sobrepostos."""
        ones = np.ones((2, 2), dtype=np.int64)
        with pytest.raises(ValueError):
            PairPartition.from_matrices([ones, np.eye(2, dtype=np.int64)])

    def test_transposed(self):
        """Testa a partição dos pares (b, a)."""
        upper = np.array([[0, 1], [0, 0]])
        lower = upper.T
        partition = PairPartition.from_matrices([np.eye(2, dtype=np.int64), upper, lower])
        assert partition.transposed().same_family([np.eye(2, dtype=np.int64), lower, upper])


class TestNomuraAlgebra:
    """
    Testes para o grafo e a álgebra de Nomura em k = 4.
    """

    def test_y_table(self, h4, ctx4):
        """Testa Y_aa = 1 e Y_ab(x) = M(x, a)/M(x, b)."""
        w = build_model("W", h4, ctx4)
        table = y_table(w)
        assert table.a.shape == (16, 16, 16)
        assert (table.a[3, 3] == 0).all() and (table.m[3, 3] == 0).all()
        assert table.vector(0, 8)[0] == w[0, 0] * w[0, 8].inverse()

    def test_nomura_w_is_scheme_algebra(self, h4, ctx4):
        """Testa N(W) = 𝒜 com classes de tamanhos 16, 64, 96, 64, 16."""
        result = nomura_algebra(build_model("W", h4, ctx4), ctx4, show_progress=False)
        assert result.dimension == 5
        assert sorted(result.partition.sizes()) == [16, 16, 64, 64, 96]
        family = scheme_family(build_relations(h4), "A")
        assert result.partition.same_family([relation.matrix for relation in family])
        assert result.ambiguity_count == 0

    def test_nomura_w_prime_is_fused_algebra(self, h4, ctx4):
        """Testa N(W′) = 𝒜′."""
        result = nomura_algebra(build_model("Wp", h4, ctx4), ctx4, show_progress=False)
        family = scheme_family(build_relations(h4), "Aprime")
        assert result.partition.same_family([relation.matrix for relation in family])

    def test_skip_does_not_change_partition(self, h4, ctx4):
        """Testa que pular arestas conectadas não altera as componentes."""
        w = build_model("W", h4, ctx4)
        fast = nomura_graph(w, ctx4, skip=True, show_progress=False)
        full = nomura_graph(w, ctx4, skip=False, show_progress=False)
        assert fast == full
        assert fast.evaluated_edges < full.evaluated_edges
        assert full.evaluated_edges == 256 * 255 // 2

    def test_backends_agree(self, h4, ctx4, hybrid4, mocker):
        """Testa partições iguais nos backends ciclotômico e híbrido, sem ambíguos."""
        confirm = mocker.spy(LaurentHybridBackend, "_confirm")
        exact = nomura_algebra(build_model("W", h4, ctx4), ctx4, show_progress=False)
        assert confirm.call_count == 0
        hybrid = nomura_algebra(build_model("W", h4, hybrid4), hybrid4, show_progress=False)
        assert exact.partition == hybrid.partition
        assert hybrid.ambiguity_count == 0
        assert confirm.call_count > 0

    def test_details(self, h4, ctx4):
        """Testa o resumo do resultado."""
        details = nomura_algebra(build_model("W", h4, ctx4), ctx4, show_progress=False).details()
        assert details["dimension"] == 5
        assert details["orientation"] == "transpose"
        assert details["representatives"][0] == [0, 0]

    def test_order_one_is_klein(self):
        """Testa que N(W) em k = 1 tem quatro classes de tamanho 4."""
        ctx = make_context(1)
        result = nomura_algebra(build_model("W", sylvester(0), ctx), ctx, show_progress=False)
        assert result.partition.sizes() == [4, 4, 4, 4]
        assert all((basis == basis.T).all() for basis in result.basis)


class TestMembership:
    """
    Testes para o teste de pertinência.
    """

    @pytest.mark.parametrize("name", ["R0", "R1", "R2", "R3", "R4"])
    def test_scheme_matrices_belong(self, name, h4, ctx4):
        """Testa A_i ∈ N(W)."""
        w = build_model("W", h4, ctx4)
        relation = build_relations(h4)[name]
        assert membership_test(relation.matrix, w, ctx4, label=name).passed

    def test_fused_matrix_does_not_belong(self, h4, ctx4):
        """Testa A(R′₁) ∉ N(W)."""
        w = build_model("W", h4, ctx4)
        report = membership_test(build_relations(h4)["R1p"].matrix, w, ctx4, label="R1p")
        assert report.verdict == Verdict.FAIL
        assert set(report.witnesses[0]) == {"a", "b", "x"}

    def test_model_belongs_to_own_algebra(self, h4, ctx4):
        """Testa W ∈ N(W)."""
        w = build_model("W", h4, ctx4)
        assert membership_test(w, w, ctx4, label="W").passed

    def test_wrong_side(self, h4, ctx4):
        """Testa candidato de lado errado."""
        w = build_model("W", h4, ctx4)
        with pytest.raises(ValueError):
            membership_test(np.eye(4, dtype=np.int64), w, ctx4)


class TestLemmaChecks:
    """
    Testes para as verificações de lemas.
    """

    def test_all_lemmas_pass(self, h4, ctx4):
        """Testa os lemas 2 a 5 e as arestas em k = 4."""
        report = lemma_checks(h4, ctx4)
        assert report.passed
        assert [sub.check_id for sub in report.subreports] == [
            "lemma2", "lemma3", "lemma4", "lemma5", "edges",
        ]
        assert report.details["exhaustive"] is True
        assert report.raise_for_verdict() is report

    def test_sampled_lemmas(self, h8):
        """Testa os lemas por amostragem em k = 8."""
        ctx = make_context(8, omega=1, xi=3)
        report = lemma_checks(h8, ctx, sample_size=200, seed=7)
        assert report.passed
        assert report.details["sample_size"] == 200

