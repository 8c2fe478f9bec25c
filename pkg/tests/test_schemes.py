"""
Testes para Esquemas
====================

Testes das relações, dos esquemas de associação, da configuração
coerente e da fusão pelas órbitas de ρ.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from hadamard import bundled, sylvester
from schemes import (
    Relation,
    build_distance_matrices,
    build_relations,
    coherent_config_check,
    cyclic_scheme,
    distance_regular_check,
    fuse_rho_orbits,
    fusion_check,
    intersection_array,
    rho_automorphism_check,
    rho_orbits,
    scheme_check,
    scheme_family,
    support_family_isomorphism,
    tensor_isomorphism,
    thin_group_orders,
    valencies,
)
from utils.exceptions import PreconditionFailed
from utils.reports import Verdict


def klein_relations():
    """Grupo de Klein agindo regularmente em 4 pontos."""
    perms = [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    return [Relation(f"V{i}", np.eye(4, dtype=np.int64)[list(p)]) for i, p in enumerate(perms)]


class TestRelations:
    """
    Testes para build_relations e scheme_family.
    """

    def test_relation_sizes(self, h4):
        """Testa |R₀|, ..., |R₄| = 16, 64, 96, 64, 16 em k = 4."""
        relations = build_relations(h4)
        sizes = [relations[f"R{i}"].size for i in range(5)]
        assert sizes == [16, 64, 96, 64, 16]
        assert relations["R1p"].size == 64
        assert relations["R3p"].size == 64

    def test_predicates_match_distance_matrices(self, h8):
        """Testa que os predicados reproduzem as matrizes de distância."""
        relations = build_relations(h8, check=False)
        distances = build_distance_matrices(h8)
        assert np.array_equal(relations["R2"].matrix, distances["A2"])
        assert np.array_equal(relations["R1p"].matrix, distances["A1p"])

    def test_invalid_relation(self):
        """Testa relação com entradas fora de 0/1."""
        with pytest.raises(ValueError):
            Relation("X", np.array([[2, 0], [0, 1]]))

    def test_unknown_family(self, h4):
        """Testa família desconhecida."""
        with pytest.raises(ValueError):
            scheme_family(build_relations(h4), "B")


class TestSchemeCheck:
    """
    Testes para os axiomas de esquema de associação.
    """

    @pytest.mark.parametrize("which", ["A", "Aprime"])
    def test_families_are_schemes(self, which, h4):
        """Testa 𝒜 e 𝒜′ em k = 4."""
        report, tensor = scheme_check(scheme_family(build_relations(h4), which), which)
        assert report.passed
        assert tensor is not None
        assert report.details["valencies"] == [1, 4, 6, 4, 1]
        assert report.details["identity"] == 0

    def test_transpose_pairing(self, h4):
        """Testa que 𝒜 é simétrico e 𝒜′ troca R′₁ e R′₃."""
        relations = build_relations(h4)
        report_a, _ = scheme_check(scheme_family(relations, "A"), "A")
        report_p, _ = scheme_check(scheme_family(relations, "Aprime"), "Aprime")
        pairing_a = {int(key): value for key, value in report_a.details["transpose_map"].items()}
        pairing_p = {int(key): value for key, value in report_p.details["transpose_map"].items()}
        assert pairing_a == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4}
        assert pairing_p == {0: 0, 1: 3, 2: 2, 3: 1, 4: 4}

    def test_missing_class_breaks_partition(self, h4):
        """Testa falha de partição sem R₄."""
        family = scheme_family(build_relations(h4), "A")[:4]
        report, tensor = scheme_check(family, "truncated")
        assert report.verdict == Verdict.FAIL
        assert report.witnesses[0]["axiom"] == "partition"
        assert tensor is None

    def test_intersection_array(self, h4):
        """Testa {k, k−1, k/2, 1; 1, k/2, k−1, k} em k = 4."""
        _, tensor = scheme_check(scheme_family(build_relations(h4), "A"), "A")
        assert intersection_array(tensor) == ([4, 3, 2, 1], [1, 2, 3, 4])
        assert valencies(tensor) == [1, 4, 6, 4, 1]

    @pytest.mark.parametrize("order", [2, 4, 8])
    def test_distance_regular(self, order):
        """Testa o grafo de Hadamard para Sylvester."""
        report = distance_regular_check(sylvester(order.bit_length() - 1))
        assert report.passed
        assert report.details["valencies"] == [1, order, 2 * (order - 1), order, 1]

    def test_distance_regular_paley(self):
        """Testa o grafo de Hadamard para a matriz de ordem 12."""
        report = distance_regular_check(bundled(12))
        assert report.passed
        assert report.details["b"] == [12, 11, 6, 1]

    def test_distance_regular_odd_order(self):
        """Testa pré-condição de k par."""
        with pytest.raises(PreconditionFailed):
            distance_regular_check(sylvester(0))


class TestThinSchemes:
    """
    Testes para esquemas de grupo e isomorfismos.
    """

    def test_cyclic_scheme(self):
        """Testa ℤ/4 com ordens 1, 2, 4, 4."""
        spec = cyclic_scheme(4)
        assert spec.name == "Z4"
        report, tensor = scheme_check(spec.relations, spec.name)
        assert report.passed
        assert thin_group_orders(tensor) == [1, 2, 4, 4]

    def test_klein_is_not_cyclic(self):
        """Testa que o grupo de Klein não é isomorfo a ℤ/4."""
        _, klein = scheme_check(klein_relations(), "V4")
        _, cyclic = scheme_check(cyclic_scheme(4).relations, "Z4")
        assert thin_group_orders(klein) == [1, 2, 2, 2]
        assert tensor_isomorphism(klein, cyclic) is None
        assert tensor_isomorphism(cyclic, cyclic) == (0, 1, 2, 3)

    def test_support_family_isomorphism(self):
        """Testa reindexação de vértices entre famílias 0/1."""
        cyclic = cyclic_scheme(4).matrices
        klein = [relation.matrix for relation in klein_relations()]
        assert support_family_isomorphism(cyclic, cyclic) == (0, 1, 2, 3)
        assert support_family_isomorphism(klein, cyclic) is None

    def test_thin_orders_of_non_thin_scheme(self, h4):
        """Testa None para esquema não fino."""
        _, tensor = scheme_check(scheme_family(build_relations(h4), "A"), "A")
        assert thin_group_orders(tensor) is None


class TestCoherentConfiguration:
    """
    Testes para a configuração coerente e ρ.
    """

    def test_coherent_configuration(self, h4):
        """Testa os axiomas e a regra de produto das dez relações."""
        report, tensor = coherent_config_check(h4)
        assert report.passed
        assert tensor.shape == (10, 10, 10)
        assert report.details["combinations"] == 100

    def test_rho_automorphism(self, h4):
        """Testa que ρ preserva as constantes de estrutura."""
        report = rho_automorphism_check(h4)
        assert report.passed

    def test_rho_orbits(self):
        """Testa as cinco órbitas de ρ."""
        assert rho_orbits() == [(0, 5), (1, 8), (2, 7), (3, 6), (4, 9)]

    def test_fusion(self, h4):
        """Testa que a fusão das órbitas reproduz 𝒜′."""
        spec = fuse_rho_orbits(h4)
        assert spec.names == ("R0", "R1p", "R2", "R3p", "R4")
        assert spec.identity_index == 0
        assert fusion_check(h4).passed

    def test_fusion_order_8(self, h8):
        """Testa a fusão em k = 8."""
        expected = build_relations(h8)
        spec = fuse_rho_orbits(h8)
        assert np.array_equal(spec.matrices[1], expected["R1p"].matrix)
