"""
Testes para Hadamard
====================

Testes das construções, da validação e do formato '+/-'.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from hadamard import (
    HadamardMatrix,
    bundled,
    generate,
    paley1,
    parse,
    read_hadamard,
    serialize,
    sylvester,
    validate,
    write_hadamard,
)
from utils.exceptions import BadPrime, ParseError, SizeLimit
from utils.reports import Verdict


class TestConstructions:
    """
    Testes para Sylvester e Paley I.
    """

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
    def test_sylvester_is_hadamard(self, m):
        """Testa H·Hᵀ = k·I para Sylvester."""
        matrix = sylvester(m)
        assert matrix.k == 2 ** m
        assert validate(matrix).passed

    def test_sylvester_first_row(self):
        """Testa que a primeira linha e a primeira coluna são só +1."""
        signs = sylvester(3).signs
        assert (signs[0] == 1).all()
        assert (signs[:, 0] == 1).all()

    def test_sylvester_limit(self):
        """Testa o limite de ordem."""
        with pytest.raises(SizeLimit):
            sylvester(5, max_order=16)

    @pytest.mark.parametrize("q", [3, 7, 11, 19])
    def test_paley_is_hadamard(self, q):
        """Testa H·Hᵀ = k·I para Paley I."""
        matrix = paley1(q)
        assert matrix.k == q + 1
        assert validate(matrix).passed

    @pytest.mark.parametrize("q", [5, 9, 13])
    def test_paley_bad_prime(self, q):
        """Testa rejeição de q ≢ 3 (mod 4) ou não primo."""
        with pytest.raises(BadPrime):
            paley1(q)

    def test_bundled_order_12(self):
        """Testa a matriz incluída de ordem 12."""
        matrix = bundled(12)
        assert matrix.k == 12
        assert validate(matrix).passed
        assert matrix == paley1(11)

    def test_generate(self):
        """Testa geração por método."""
        assert generate(8) == sylvester(3)
        assert generate(12, "paley") == paley1(11)
        with pytest.raises(ValueError):
            generate(12, "sylvester")
        with pytest.raises(ValueError):
            generate(8, "williamson")


class TestValidate:
    """
    Testes para a validação exata.
    """

    def test_flipped_entry_fails(self, h4):
        """Testa que um sinal trocado gera testemunha."""
        report = validate(h4.flipped(0, 0))
        assert report.verdict == Verdict.FAIL
        assert report.error == "VerificationFailed"
        witness = report.witnesses[0]
        assert witness["row"] == 0 and witness["column"] == 1

    def test_array_input(self):
        """Testa validação de array sem sinais ±1."""
        report = validate(np.array([[1, 0], [0, 1]]))
        assert report.verdict == Verdict.FAIL

    def test_non_sign_entries_rejected(self):
        """Testa erro ao construir matriz com entradas fora de ±1."""
        with pytest.raises(ValueError):
            HadamardMatrix(np.array([[1, 2], [1, -1]]))


class TestTextFormat:
    """
    Testes para o formato '+/-'.
    """

    def test_parse_with_comments(self):
        """Testa leitura ignorando comentários."""
        matrix = parse("# ordem 2\n++\n+-\n")
        assert matrix == sylvester(1)

    def test_serialize(self, h4):
        """Testa a serialização canônica."""
        assert serialize(h4) == "++++\n+-+-\n++--\n+--+\n"

    def test_invalid_character(self):
        """Testa posição de caractere inválido."""
        with pytest.raises(ParseError) as error:
            parse("++\n+x\n")
        assert (error.value.line, error.value.column) == (2, 2)

    def test_ragged_rows(self):
        """Testa linhas de tamanhos diferentes."""
        with pytest.raises(ParseError) as error:
            parse("++\n+\n")
        assert error.value.line == 2

    def test_blank_line_and_empty(self):
        """Testa linha vazia e arquivo sem linhas."""
        with pytest.raises(ParseError):
            parse("++\n\n+-\n")
        with pytest.raises(ParseError):
            parse("# nada\n")

    def test_not_square(self):
        """Testa matriz não quadrada."""
        with pytest.raises(ParseError):
            parse("++\n")

    def test_file_io(self, tmp_path, h8):
        """Testa gravação e leitura de arquivo."""
        path = write_hadamard(h8, tmp_path / "h8.txt")
        loaded = read_hadamard(path)
        assert loaded == h8
        assert loaded.source == str(path)
