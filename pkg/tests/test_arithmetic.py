"""
Testes para Aritmética
======================

Testes de monômios, escalares de Laurent, corpos ciclotômicos,
contextos, backends de teste de zero e do kernel de somas.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import (
    BackendFactory,
    BaseBackend,
    CycScalar,
    ExactSumKernel,
    LaurentScalar,
    Monomial,
    UMode,
    UModeKind,
    ZeroVerdict,
    is_zero,
    make_context,
    pack_monomial_matrix,
    parse_scalar,
    raise_if_ambiguous,
)
from arithmetic.context import dominant_root
from utils.exceptions import (
    AmbiguousZero,
    ConstraintViolation,
    DivisionByZero,
    IncompatibleMode,
    NonInvertible,
    NonInvertibleEntry,
    ParseError,
)


class TestMonomial:
    """
    Testes para Monomial.
    """

    def test_sign_is_folded_into_coefficient(self):
        """Testa que ζ₈⁴ = −1 vai para o coeficiente."""
        assert Monomial.zeta(4) == Monomial(-1, 0, 0)
        assert Monomial.zeta(5) == Monomial(-1, 1, 0)

    def test_product_and_inverse(self):
        """Testa produto e inverso exatos."""
        assert Monomial.zeta(1) * Monomial.zeta(7) == Monomial.one()
        x = Monomial(1, 3, 2)
        assert x * x.inverse() == Monomial.one()

    def test_zero_coefficient_rejected(self):
        """Testa erro para coeficiente nulo."""
        with pytest.raises(DivisionByZero):
            Monomial(0, 0, 0)

    def test_conjugation(self):
        """Testa conjugação com |u| = 1 e com u real."""
        x = Monomial(1, 1, 2)
        assert x.conj(True) == Monomial(1, 7, -2)
        assert x.conj(False) == Monomial(1, 7, 2)

    def test_packed(self):
        """Testa a forma compacta com sinal em ζ₈⁴."""
        assert Monomial.zeta(5).packed() == (5, 0)
        assert Monomial.u_power(-1, -1).packed() == (4, -1)
        with pytest.raises(ValueError):
            Monomial(2, 0, 0).packed()


class TestLaurentScalar:
    """
    Testes para LaurentScalar.
    """

    def test_relation_reduces_to_zero(self):
        """Testa que u⁴ − (k−2) + u⁻⁴ é zero canônico."""
        for k in (4, 8, 12):
            x = LaurentScalar.from_terms(k, [(1, 0, 4), (-(k - 2), 0, 0), (1, 0, -4)])
            assert x.is_canonical_zero()

    def test_loop_scalar_squares_to_k(self):
        """Testa (u² + u⁻²)² = k no quociente."""
        for k in (1, 2, 4, 8):
            loop = LaurentScalar.from_terms(k, [(1, 0, 2), (1, 0, -2)])
            assert loop * loop == LaurentScalar.from_int(k, k)

    def test_arithmetic(self):
        """Testa soma, subtração e produto com inteiros e monômios."""
        one = LaurentScalar.one(4)
        assert (one + 1) == LaurentScalar.from_int(4, 2)
        assert (one - Monomial.one()).is_canonical_zero()
        assert (one * Fraction(1, 2)) == LaurentScalar.from_int(4, Fraction(1, 2))

    def test_inverse(self):
        """Testa inverso de um termo e erros de inversão."""
        x = LaurentScalar.from_monomial(8, Monomial(2, 1, 3))
        assert (x * x.inverse()) == LaurentScalar.one(8)
        with pytest.raises(DivisionByZero):
            LaurentScalar.zero(8).inverse()
        with pytest.raises(NonInvertible):
            LaurentScalar.from_terms(8, [(1, 0, 0), (1, 1, 0)]).inverse()

    def test_to_monomial(self):
        """Testa conversão de escalar de um termo."""
        assert LaurentScalar.from_monomial(4, Monomial.zeta(3)).to_monomial() == Monomial.zeta(3)
        assert LaurentScalar.from_terms(4, [(1, 0, 0), (1, 1, 0)]).to_monomial() is None

    def test_parse(self):
        """Testa leitura da serialização."""
        x = parse_scalar("1*z8^1*u^2+-1*z8^0*u^0", 4)
        assert x.terms == {(1, 2): Fraction(1), (0, 0): Fraction(-1)}
        assert parse_scalar("0", 4).is_canonical_zero()

    def test_parse_error(self):
        """Testa erro de serialização malformada."""
        with pytest.raises(ParseError):
            parse_scalar("1*x^1", 4)

    def test_evaluate(self):
        """Testa avaliação numérica de u² + u⁻² em u = 1."""
        loop = LaurentScalar.from_terms(4, [(1, 0, 2), (1, 0, -2)])
        assert abs(complex(loop.evaluate(1, 30)) - 2) < 1e-12


class TestCycScalar:
    """
    Testes para CycScalar.
    """

    def test_half_turn(self):
        """Testa ζ₈⁴ + 1 = 0."""
        x = CycScalar.from_exponent(8, 4) + CycScalar.from_exponent(8, 0)
        assert x.is_zero()

    def test_cube_roots_sum(self):
        """Testa 1 + ζ₃ + ζ₃² = 0 em Q(ζ₂₄)."""
        x = CycScalar.from_terms(24, [(1, 0), (1, 8), (1, 16)])
        assert x.is_zero()

    def test_product_and_inverse(self):
        """Testa ζ₁₆ · ζ₁₆¹⁵ = 1 e inverso de 1 + ζ₁₆."""
        one = CycScalar.from_exponent(16, 0)
        assert (CycScalar.from_exponent(16, 1) * CycScalar.from_exponent(16, 15) - one).is_zero()
        x = CycScalar.from_terms(16, [(1, 0), (1, 1)])
        assert (x * x.inverse() - one).is_zero()

    def test_unsupported_modulus(self):
        """Testa erro para módulo não suportado."""
        with pytest.raises(IncompatibleMode):
            CycScalar.zero(12)


def _random_laurent(rng, k: int) -> LaurentScalar:
    size = int(rng.integers(1, 7))
    return LaurentScalar.from_terms(
        k,
        [
            (int(rng.integers(-2, 3)), int(rng.integers(0, 8)), int(rng.integers(-4, 5)))
            for _ in range(size)
        ],
    )


class TestConjugation:
    """
    Testes para a conjugação complexa como automorfismo involutivo.
    """

    @pytest.mark.parametrize("k", [4, 8])
    @pytest.mark.parametrize("inverts_u", [True, False])
    def test_laurent_involution_and_product(self, k, inverts_u):
        """Testa conj(conj(x)) = x e conj(x·y) = conj(x)·conj(y) no quociente."""
        rng = np.random.default_rng(k * 10 + int(inverts_u))
        for _ in range(200):
            x = _random_laurent(rng, k)
            y = _random_laurent(rng, k)
            assert x.conj(inverts_u).conj(inverts_u) == x
            assert (x * y).conj(inverts_u) == x.conj(inverts_u) * y.conj(inverts_u)
            assert (x + y).conj(inverts_u) == x.conj(inverts_u) + y.conj(inverts_u)

    def test_unit_and_real_conjugation_differ_on_u(self):
        """Testa que u ↦ u⁻¹ só quando |u| = 1."""
        u = LaurentScalar.from_terms(8, [(1, 0, 1)])
        assert u.conj(True) == LaurentScalar.from_terms(8, [(1, 0, -1)])
        assert u.conj(False) == u

    @pytest.mark.parametrize("modulus", [8, 16, 24])
    def test_cyclotomic_involution_and_product(self, modulus):
        """Testa conjugação em Q(ζ_N) como automorfismo involutivo."""
        rng = np.random.default_rng(modulus)
        for _ in range(200):
            x, y = (
                CycScalar.from_terms(
                    modulus,
                    [
                        (int(rng.integers(-2, 3)), int(rng.integers(0, modulus)))
                        for _ in range(int(rng.integers(1, 6)))
                    ],
                )
                for _ in range(2)
            )
            assert x.conj().conj() == x
            assert (x * y).conj() == x.conj() * y.conj()

    def test_cyclotomic_conj_matches_laurent_at_unit_root(self):
        """Testa que especializar e conjugar comutam em u = ζ₁₆."""
        rng = np.random.default_rng(7)
        for _ in range(100):
            x = _random_laurent(rng, 2)
            specialized = CycScalar.from_laurent(x, 16, 1)
            assert CycScalar.from_laurent(x.conj(True), 16, 1) == specialized.conj()


class TestScalarContext:
    """
    Testes para make_context e UMode.
    """

    def test_defaults_per_order(self):
        """Testa modo e backend padrão por ordem."""
        assert make_context(4).u_mode.kind == UModeKind.UNIT
        assert make_context(4).backend == "cyclotomic"
        assert make_context(1).u_mode == UMode.cyclotomic(24, 2)
        assert make_context(2).u_mode == UMode.cyclotomic(16, 1)
        ctx8 = make_context(8)
        assert ctx8.u_mode.kind == UModeKind.REAL_DOMINANT
        assert ctx8.backend == "laurent_hybrid"

    def test_invalid_xi(self):
        """Testa que ξ = i (não primitiva) é rejeitada."""
        with pytest.raises(ConstraintViolation):
            make_context(4, xi=2)

    def test_invalid_omega(self):
        """Testa ω fora de 0..3."""
        with pytest.raises(ConstraintViolation):
            make_context(4, omega=5)

    def test_unit_requires_k4(self):
        """Testa u = 1 apenas para k = 4."""
        with pytest.raises(ConstraintViolation):
            make_context(3, u_mode="unit")

    def test_cyclotomic_backend_rejects_real_root(self):
        """Testa incompatibilidade entre backend e modo de u."""
        with pytest.raises(IncompatibleMode):
            make_context(8, backend="cyclotomic")

    def test_wrong_cyclotomic_root(self):
        """Testa raiz ciclotômica que não satisfaz a restrição."""
        with pytest.raises(ConstraintViolation):
            make_context(2, u_mode="cyc:16:2")

    def test_iota_squares_to_minus_one(self):
        """Testa ι = −ξ² com ι² = −1 para todo ξ."""
        for xi in (1, 3, 5, 7):
            iota = make_context(4, xi=xi).iota
            assert iota * iota == Monomial(-1, 0, 0)

    def test_with_parameters(self, ctx4):
        """Testa cópia validada com parâmetros alterados."""
        other = ctx4.with_parameters(omega=2, xi=7)
        assert (other.omega, other.xi, other.k) == (2, 7, 4)
        with pytest.raises(ConstraintViolation):
            ctx4.with_parameters(xi=4)

    def test_exact_root_at_k4(self, hybrid4):
        """Testa que a raiz real dominante em k = 4 é u = 1 exato."""
        assert hybrid4.exact_root == (8, 0)

    def test_dominant_root(self):
        """Testa a raiz real dominante em k = 8."""
        u = complex(dominant_root(8, 30)).real
        assert abs((u ** 2 + u ** -2) ** 2 - 8) < 1e-10
        with pytest.raises(ConstraintViolation):
            dominant_root(2, 30)

    def test_parse_mode(self):
        """Testa leitura de modos de u."""
        assert UMode.parse("cyc:16:1") == UMode.cyclotomic(16, 1)
        assert UMode.parse("real").kind == UModeKind.REAL_DOMINANT
        with pytest.raises(IncompatibleMode):
            UMode.parse("bogus")


class TestBackends:
    """
    Testes para backends de teste de zero.
    """

    def test_exact_zero_off_canonical_form(self, ctx4):
        """Testa que u − 1 é zero em u = 1 sem ser zero canônico."""
        x = LaurentScalar.from_terms(4, [(1, 0, 1), (-1, 0, 0)])
        assert not x.is_canonical_zero()
        assert is_zero(x, ctx4) == ZeroVerdict.ZERO

    def test_hybrid_nonzero(self):
        """Testa u − 1 não nulo na raiz real dominante de k = 8."""
        x = LaurentScalar.from_terms(8, [(1, 0, 1), (-1, 0, 0)])
        assert is_zero(x, make_context(8)) == ZeroVerdict.NONZERO

    def test_hybrid_evaluates_before_exact_resolution(self, hybrid4):
        """Testa avaliação numérica em k = 4 e resolução exata só na faixa de tolerância."""
        backend = BackendFactory.create_backend(hybrid4)
        off_canonical_zero = LaurentScalar.from_terms(4, [(1, 0, 1), (-1, 0, 0)])
        assert backend.is_zero(off_canonical_zero) == ZeroVerdict.ZERO
        assert (backend.numeric_evaluations, backend.exact_resolutions) == (1, 1)

        nonzero = LaurentScalar.from_terms(4, [(1, 0, 3), (1, 2, -1)])
        assert backend.is_zero(nonzero) == ZeroVerdict.NONZERO
        assert (backend.numeric_evaluations, backend.exact_resolutions) == (2, 1)

        assert backend.is_zero(LaurentScalar.zero(4)) == ZeroVerdict.ZERO
        assert backend.numeric_evaluations == 2

    def test_hybrid_agrees_with_cyclotomic_on_random_sums(self, ctx4, hybrid4):
        """Testa 1000 somas aleatórias de monômios: híbrido e exato concordam em k = 4."""
        rng = np.random.default_rng(20240607)
        exact = BackendFactory.create_backend(ctx4)
        hybrid = BackendFactory.create_backend(hybrid4)
        exponents = [-4, -3, -1, 0, 1, 3, 4]
        verdicts = []
        for _ in range(1000):
            size = int(rng.integers(1, 9))
            terms = [
                (int(rng.choice([-1, 1])), int(rng.integers(0, 8)), int(rng.choice(exponents)))
                for _ in range(size)
            ]
            if rng.random() < 0.5:
                # mesmo valor em u = 1 com outro expoente de u
                terms += [(-c, a, int(rng.choice(exponents))) for c, a, _ in terms]
            x = LaurentScalar.from_terms(4, terms)
            verdict = hybrid.is_zero(x)
            assert verdict == exact.is_zero(x), terms
            verdicts.append(verdict)
        assert ZeroVerdict.AMBIGUOUS not in verdicts
        assert {ZeroVerdict.ZERO, ZeroVerdict.NONZERO} <= set(verdicts)
        assert hybrid.numeric_evaluations > 0
        assert hybrid.exact_resolutions > 0

    def test_numeric_backend_is_ambiguous_on_true_zero(self):
        """Testa que o backend numérico não afirma zero fora da forma canônica."""
        ctx = make_context(4, u_mode="numeric:1", backend="numeric")
        x = LaurentScalar.from_terms(4, [(1, 0, 1), (-1, 0, 0)])
        assert is_zero(x, ctx) == ZeroVerdict.AMBIGUOUS
        assert is_zero(LaurentScalar.zero(4), ctx) == ZeroVerdict.ZERO

    def test_factory(self, ctx4):
        """Testa criação, apelidos e erros da factory."""
        assert BackendFactory.create_backend(ctx4, "exact").name == "cyclotomic"
        assert BackendFactory.get_supported_backends() == ["cyclotomic", "laurent_hybrid", "numeric"]
        with pytest.raises(ValueError):
            BackendFactory.create_backend(ctx4, "bogus")

    def test_register_invalid_backend(self):
        """Testa erro ao registrar classe que não é backend."""
        with pytest.raises(TypeError):
            BackendFactory.register_backend("bogus", dict)
        assert issubclass(BackendFactory._backends["hybrid"], BaseBackend)


class TestExactSumKernel:
    """
    Testes para o kernel de somas agrupadas.
    """

    def test_decide_groups(self, ctx4):
        """Testa 1 + (−1) = 0 e 1 ≠ 0 por grupo."""
        kernel = ExactSumKernel(ctx4)
        codes = kernel.decide([0, 4, 0], [0, 0, 0], [0, 0, 1], 2)
        assert list(codes) == [ZeroVerdict.ZERO, ZeroVerdict.NONZERO]
        assert kernel.counts["ZERO"] == 1 and kernel.counts["NONZERO"] == 1

    def test_inner_products(self, ctx4):
        """Testa ⟨v, v⟩ ≠ 0 e ⟨(1, 1), (1, −1)⟩ = 0."""
        kernel = ExactSumKernel(ctx4)
        left_a = np.array([[0, 2], [0, 0]])
        right_a = np.array([[0, 2], [0, 4]])
        zeros = np.zeros((2, 2), dtype=np.int64)
        codes = kernel.inner_products(left_a, zeros, right_a, zeros)
        assert list(codes) == [ZeroVerdict.NONZERO, ZeroVerdict.ZERO]

    def test_pack_monomial_matrix(self):
        """Testa empacotamento com máscara de zeros."""
        entries = [[Monomial.zeta(5), LaurentScalar.zero(4)], [Monomial.u_power(3), Monomial.one()]]
        a, m, mask = pack_monomial_matrix(entries, allow_zero=True)
        assert a.tolist() == [[5, 0], [0, 0]]
        assert m.tolist() == [[0, 0], [3, 0]]
        assert mask.tolist() == [[True, False], [True, True]]
        with pytest.raises(NonInvertibleEntry):
            pack_monomial_matrix(entries)

    def test_raise_if_ambiguous(self):
        """Testa exceção com índice do primeiro caso ambíguo."""
        codes = np.array([ZeroVerdict.ZERO, ZeroVerdict.AMBIGUOUS], dtype=np.int8)
        with pytest.raises(AmbiguousZero) as info:
            raise_if_ambiguous(codes, "teste")
        assert info.value.context["index"] == 1
