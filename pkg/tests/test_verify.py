"""
Testes para Verificação
=======================

Testes do teorema, da varredura ω×ξ, da observação para k = 1 e
k = 2, do manifesto, do executor e da linha de comando.

Autor: Seu Nome
Data: 2025-09-20
"""

import json
import sys
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import make_context
from hadamard import bundled, read_hadamard, sylvester, write_hadamard
from linalg import load_matrix
from main import main
from utils.exceptions import AmbiguousZero, ConstraintViolation, OrderMismatch, PreconditionFailed
from utils.reports import Verdict, VerificationReport
from verify import (
    CHECK_IDS,
    CHECK_REGISTRY,
    RunManifest,
    coefficient_distinctness,
    default_source,
    error_report,
    exit_code,
    load_hadamard,
    report_emit,
    verify_all,
    verify_remark,
    verify_sweep,
    verify_theorem,
)


class TestTheorem:
    """
    Testes para verify_theorem.
    """

    def test_theorem_order_4(self, h4, ctx4):
        """Testa N(W) = 𝒜 e N(W′) = 𝒜′ em k = 4."""
        report = verify_theorem(h4, ctx4, show_progress=False)
        assert report.passed
        assert [sub.check_id for sub in report.subreports] == [
            "theorem.clause_i",
            "theorem.clause_ii",
            "theorem.clause_iii",
            "theorem.clause_iv",
            "theorem.self_membership",
            "theorem.gauge_partitions",
        ]
        assert report.details["dimensions"] == {"W": 5, "Wprime": 5}

    def test_theorem_hybrid_backend(self, h4, hybrid4):
        """Testa o teorema com o backend híbrido."""
        report = verify_theorem(h4, hybrid4, show_progress=False)
        assert report.passed
        assert report.backend == "laurent_hybrid"

    def test_theorem_requires_order_4(self):
        """Testa a pré-condição k ≥ 4."""
        with pytest.raises(PreconditionFailed):
            verify_theorem(sylvester(1), make_context(2), show_progress=False)

    def test_coefficients_distinct(self, ctx4):
        """Testa ξ, −u⁻¹, −ξ e u³ distintos dois a dois."""
        report = coefficient_distinctness(ctx4)
        assert report.passed
        assert len(report.details["zero_tests"]) == 6
        assert set(report.details["zero_tests"].values()) == {"NONZERO"}

    @pytest.mark.slow
    def test_theorem_order_8(self, h8):
        """Testa o teorema em k = 8 (raiz real dominante)."""
        report = verify_theorem(h8, make_context(8), show_progress=False)
        assert report.passed

    @pytest.mark.slow
    def test_theorem_order_12(self):
        """Testa o teorema com a matriz incluída de ordem 12."""
        report = verify_theorem(bundled(12), make_context(12), show_progress=False)
        assert report.passed

    @pytest.mark.slow
    def test_sweep(self, h4):
        """Testa os 16 pares (ω, ξ) em k = 4."""
        report = verify_sweep(h4, show_progress=False)
        assert report.passed
        assert len(report.subreports) == 16
        assert report.subreports[0].check_id == "theorem.omega0.xi1"


class TestRemark:
    """
    Testes para verify_remark.
    """

    def test_order_1(self):
        """Testa k = 1: N(W) é o grupo de Klein e N(W′) é ℤ/4."""
        report = verify_remark(1, show_progress=False)
        by_id = {sub.check_id: sub for sub in report.subreports}

        assert report.verdict == Verdict.FAIL
        assert report.details["dimensions"] == {"W": 4, "Wprime": 4}
        assert report.details["isomorphism_notion"] == "support_family"

        assert by_id["remark.W"].verdict == Verdict.FAIL
        assert by_id["remark.W"].details["group_orders"] == [1, 2, 2, 2]
        assert by_id["remark.Wprime"].passed
        assert by_id["remark.Wprime"].details["group_orders"] == [1, 2, 4, 4]
        assert by_id["remark.equal"].verdict == Verdict.FAIL

    def test_order_2_structure(self):
        """Testa k = 2: comparação por tensor de interseção com ℤ/8."""
        report = verify_remark(2, show_progress=False)
        assert report.details["target"] == "Z8"
        assert report.details["isomorphism_notion"] == "intersection_tensor"
        assert [sub.check_id for sub in report.subreports] == ["remark.W", "remark.Wprime"]

    def test_other_orders_rejected(self):
        """Testa a pré-condição k ∈ {1, 2}."""
        with pytest.raises(PreconditionFailed):
            verify_remark(4)


class TestRunManifest:
    """
    Testes para RunManifest.
    """

    def test_defaults(self):
        """Testa todas as verificações por padrão."""
        manifest = RunManifest()
        assert manifest.checks == list(CHECK_IDS)
        assert manifest.source_for(8) == "sylvester"

    def test_checks_parsing(self):
        """Testa texto separado por vírgula e ordem canônica."""
        manifest = RunManifest(checks="type3, hadamard", k_values="1,4")
        assert manifest.checks == ["hadamard", "type3"]
        assert manifest.k_values == [1, 4]
        assert RunManifest(checks="all").checks == list(CHECK_IDS)

    def test_unknown_check(self):
        """Testa erro para verificação desconhecida."""
        with pytest.raises(ValidationError):
            RunManifest(checks=["hadamard", "spectrum"])

    def test_invalid_orders(self):
        """Testa ordens vazias ou não positivas."""
        with pytest.raises(ValidationError):
            RunManifest(k_values=[])
        with pytest.raises(ValidationError):
            RunManifest(k_values=[0, 4])

    def test_hadamard_sources(self, tmp_path):
        """Testa origem para ordem ausente e arquivo inexistente."""
        with pytest.raises(ValidationError):
            RunManifest(k_values=[4], hadamard={8: "sylvester"})
        with pytest.raises(ValidationError):
            RunManifest(k_values=[4], hadamard={4: str(tmp_path / "nada.txt")})

    def test_default_source(self):
        """Testa a origem padrão por ordem."""
        assert default_source(1) == "sylvester"
        assert default_source(12) == "paley"
        assert default_source(20) == "paley"
        assert default_source(28) == "bundled"

    def test_from_file(self, tmp_path):
        """Testa leitura de manifesto JSON."""
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps({"checks": ["hadamard"], "k_values": [2], "omega": 1}), encoding="utf-8")
        manifest = RunManifest.from_file(path)
        assert manifest.checks == ["hadamard"]
        assert manifest.omega == 1


class TestRunnerHelpers:
    """
    Testes para as funções auxiliares do executor.
    """

    def test_registry_matches_check_ids(self):
        """Testa que o registro cobre exatamente os identificadores."""
        assert list(CHECK_REGISTRY) == list(CHECK_IDS)

    def test_applicability(self):
        """Testa as ordens em que cada verificação se aplica."""
        assert not CHECK_REGISTRY["scheme"].applies(1)
        assert CHECK_REGISTRY["scheme"].applies(2)
        assert not CHECK_REGISTRY["distance_regular"].applies(3)
        assert CHECK_REGISTRY["theorem"].applies(8)
        assert not CHECK_REGISTRY["theorem"].applies(2)
        assert CHECK_REGISTRY["sweep"].applies(4) and not CHECK_REGISTRY["sweep"].applies(8)
        assert CHECK_REGISTRY["remark"].applies(1) and not CHECK_REGISTRY["remark"].applies(4)

    def test_exit_code(self):
        """Testa 0 (pass), 1 (fail) e 2 (ambiguous)."""
        passed = VerificationReport(check_id="a")
        failed = VerificationReport(check_id="b", verdict=Verdict.FAIL, witnesses=[{"x": 1}])
        ambiguous = VerificationReport(check_id="c", verdict=Verdict.AMBIGUOUS, ambiguity_count=1)
        assert exit_code([passed]) == 0
        assert exit_code([passed, failed]) == 1
        assert exit_code([failed, ambiguous]) == 2

    def test_error_report(self):
        """Testa conversão de exceções em relatórios."""
        ambiguous = error_report("type2", AmbiguousZero("ambíguo", pair=[0, 1]), k=4)
        assert ambiguous.verdict == Verdict.AMBIGUOUS
        assert ambiguous.ambiguity_count == 1

        failed = error_report("context", ConstraintViolation("ξ inválido", xi=2), k=4)
        assert failed.verdict == Verdict.FAIL
        assert failed.witnesses[0]["error"] == "ConstraintViolation"
        assert failed.witnesses[0]["xi"] == 2

    def test_report_emit_is_deterministic(self, tmp_path):
        """Testa corpo idêntico byte a byte com tempos diferentes."""
        first = VerificationReport(check_id="type2.W", k=4, details={"constant": 16}, timing=0.5)
        second = first.model_copy(update={"timing": 2.5})
        path_a = report_emit(first, tmp_path / "a" / "type2.W.json")
        path_b = report_emit(second, tmp_path / "b" / "type2.W.json")
        assert path_a.read_bytes() == path_b.read_bytes()
        assert b"timing" not in path_a.read_bytes()
        timing = json.loads((tmp_path / "b" / "type2.W.timing.json").read_text(encoding="utf-8"))
        assert timing == {"type2.W": 2.5}

    def test_load_hadamard(self, tmp_path, h8):
        """Testa origens geradas e arquivo com ordem errada."""
        assert load_hadamard("sylvester", 4) == sylvester(2)
        assert load_hadamard("bundled", 12).k == 12
        path = write_hadamard(h8, tmp_path / "h8.txt")
        with pytest.raises(OrderMismatch):
            load_hadamard(str(path), 4)


class TestVerifyAll:
    """
    Testes de execução completa do manifesto.
    """

    def test_small_run(self, tmp_path):
        """Testa execução com relatórios e resumo gravados."""
        manifest = RunManifest(checks=["hadamard", "type2", "scheme"], k_values=[1, 4], output_dir=str(tmp_path))
        reports = verify_all(manifest)

        assert [(r.k, r.check_id) for r in reports] == [
            (1, "hadamard.validate"),
            (1, "type2.W"),
            (1, "type2.Wprime"),
            (4, "hadamard.validate"),
            (4, "type2.W"),
            (4, "type2.Wprime"),
            (4, "scheme_check.A"),
            (4, "scheme_check.Aprime"),
        ]
        assert all(report.passed for report in reports)
        assert (tmp_path / "k4" / "scheme_check.Aprime.json").exists()
        assert (tmp_path / "k4" / "type2.W.timing.json").exists()

        summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert summary["exit_code"] == 0
        assert len(summary["reports"]) == 8
        assert (tmp_path / "summary.csv").exists()

    def test_corrupted_hadamard_skips_order(self, tmp_path, h4):
        """Testa que H inválida pula as demais verificações da ordem."""
        path = write_hadamard(h4.flipped(2, 3), tmp_path / "bad.txt")
        manifest = RunManifest(
            checks=["hadamard", "type2", "gauge"], k_values=[4],
            hadamard={4: str(path)}, output_dir=str(tmp_path / "out"),
        )
        reports = verify_all(manifest)
        assert [r.check_id for r in reports] == ["hadamard.validate"]
        assert reports[0].verdict == Verdict.FAIL

        summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
        assert summary["skipped"] == {"4": ["type2", "gauge"]}
        assert summary["exit_code"] == 1

    def test_invalid_xi_becomes_report(self, tmp_path):
        """Testa ξ = i (não primitiva): relatório 'context' em vez de exceção."""
        manifest = RunManifest(checks=["hadamard"], k_values=[4], xi=2, output_dir=str(tmp_path))
        reports = verify_all(manifest)
        assert len(reports) == 1
        assert reports[0].check_id == "context"
        assert reports[0].witnesses[0]["error"] == "ConstraintViolation"
        assert (tmp_path / "k4" / "context.json").exists()

    def test_summary_is_deterministic(self, tmp_path):
        """Testa summary.json idêntico em duas execuções."""
        for name in ("a", "b"):
            verify_all(RunManifest(checks=["hadamard", "type2"], k_values=[2], output_dir=str(tmp_path / name)))
        assert (tmp_path / "a" / "summary.json").read_bytes() == (tmp_path / "b" / "summary.json").read_bytes()
        assert (tmp_path / "a" / "k2" / "type2.W.json").read_bytes() == \
            (tmp_path / "b" / "k2" / "type2.W.json").read_bytes()

    @patch("verify.runner.validate")
    def test_unexpected_error_becomes_report(self, mock_validate, tmp_path):
        """Testa que exceção inesperada vira relatório 'fail'."""
        mock_validate.side_effect = RuntimeError("falha simulada")
        reports = verify_all(RunManifest(checks=["hadamard", "type2"], k_values=[2], output_dir=str(tmp_path)))
        assert reports[0].check_id == "hadamard"
        assert reports[0].error == "RuntimeError"
        assert len(reports) == 1
        mock_validate.assert_called_once()


class TestCommandLine:
    """
    Testes da linha de comando.
    """

    def test_gen_hadamard_stdout(self, capsys):
        """Testa a matriz de ordem 2 na saída padrão."""
        assert main(["gen-hadamard", "--order", "2"]) == 0
        assert capsys.readouterr().out.endswith("++\n+-\n")

    def test_gen_hadamard_file(self, tmp_path):
        """Testa gravação de arquivo."""
        out = tmp_path / "h8.txt"
        assert main(["gen-hadamard", "--order", "8", "--out", str(out)]) == 0
        assert read_hadamard(out) == sylvester(3)

    def test_gen_hadamard_bad_order(self):
        """Testa código 1 para ordem incompatível."""
        assert main(["gen-hadamard", "--order", "12", "--method", "sylvester"]) == 1

    def test_build_model(self, tmp_path):
        """Testa exportação de W′ em JSON."""
        out = tmp_path / "wp.json"
        assert main(["build-model", "--kind", "wp", "--k", "4", "--xi", "3", "--out", str(out)]) == 0
        assert load_matrix(out, 4).n == 16

    def test_check_scheme(self, tmp_path):
        """Testa a configuração coerente pela CLI."""
        out = tmp_path / "cc.json"
        assert main(["check-scheme", "--which", "cc", "--k", "4", "--out", str(out)]) == 0
        assert json.loads(out.read_text(encoding="utf-8"))["verdict"] == "pass"

    def test_nomura_from_model_file(self, tmp_path):
        """Testa N(W) a partir de arquivo gerado por build-model."""
        model = tmp_path / "w.json"
        out = tmp_path / "nomura.json"
        assert main(["build-model", "--kind", "w", "--k", "4", "--out", str(model)]) == 0
        assert main(["nomura", "--model", str(model), "--out", str(out)]) == 0
        details = json.loads(out.read_text(encoding="utf-8"))["details"]
        assert details["dimension"] == 5
        assert sorted(details["class_sizes"]) == [16, 16, 64, 64, 96]

    def test_verify_lemma(self, tmp_path, mocker):
        """Testa a seleção de um lema."""
        spy = mocker.spy(sys.modules["main"], "display_summary")
        assert main(["verify", "--lemma", "3", "--k", "4", "--out", str(tmp_path)]) == 0
        shown = spy.call_args[0][0]
        assert [report.check_id for report in shown] == ["lemma3", "hadamard.validate"]

    def test_verify_theorem(self, tmp_path):
        """Testa o teorema pela CLI em k = 4."""
        assert main(["verify", "--theorem", "--k", "4", "--out", str(tmp_path)]) == 0
        assert (tmp_path / "k4" / "theorem.json").exists()

    def test_verify_remark_exit_code(self, tmp_path):
        """Testa código 1 para a observação em k = 1."""
        assert main(["verify", "--remark", "1", "--out", str(tmp_path)]) == 1
        assert (tmp_path / "k1" / "remark.k1.json").exists()
