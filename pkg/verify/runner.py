"""
Executor de Verificações
========================

Executa o manifesto ordem a ordem, na sequência canônica das
verificações, converte exceções em relatórios e grava um JSON por
verificação, além de ``summary.json`` e ``summary.csv``.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

import pandas as pd
from tqdm import tqdm

from arithmetic import ScalarContext, make_context
from config import get_settings
from hadamard import HadamardMatrix, bundled, generate, read_hadamard, validate
from models import ModelKind, build_model, gauge_identity_check, type2_check, type3_check
from nomura import lemma_checks
from schemes import (
    build_relations,
    coherent_config_check,
    distance_regular_check,
    fusion_check,
    rho_automorphism_check,
    scheme_check,
    scheme_family,
)
from utils.exceptions import AmbiguousEdge, AmbiguousZero, OrderMismatch, SpinKitError
from utils.helpers import canonical_json
from utils.logger import log_check_result, log_error_with_context, setup_logger
from utils.reports import Verdict, VerificationReport
from .manifest import RunManifest
from .theorem import REMARK_ORDERS, THEOREM_MIN_K, verify_remark, verify_sweep, verify_theorem

logger = setup_logger(__name__)


@dataclass
class OrderRun:
    """Estado de uma ordem k durante a execução."""

    k: int
    matrix: HadamardMatrix
    ctx: ScalarContext
    manifest: RunManifest


@dataclass(frozen=True)
class CheckEntry:
    """Verificação registrada: função executora e ordens em que se aplica."""

    run: Callable[[OrderRun], List[VerificationReport]]
    applies: Callable[[int], bool]
    description: str


def _both_models(check: Callable, state: OrderRun, **kwargs) -> List[VerificationReport]:
    return [
        check(build_model(kind, state.matrix, state.ctx), state.ctx, **kwargs)
        for kind in (ModelKind.W, ModelKind.WPRIME)
    ]


def _scheme_reports(state: OrderRun) -> List[VerificationReport]:
    relations = build_relations(state.matrix)
    return [scheme_check(scheme_family(relations, which), which)[0] for which in ("A", "Aprime")]


def _has_scheme_layer(k: int) -> bool:
    # Para k = 1 a relação R₂ é vazia
    return k >= 2


CHECK_REGISTRY: Dict[str, CheckEntry] = {
    "hadamard": CheckEntry(
        lambda s: [validate(s.matrix)], lambda k: True, "H·Hᵀ = k·I"),
    "type2": CheckEntry(
        lambda s: _both_models(type2_check, s), lambda k: True, "condição tipo II de W e W′"),
    "type3": CheckEntry(
        lambda s: _both_models(type3_check, s), lambda k: True, "condição tipo III de W e W′"),
    "gauge": CheckEntry(
        lambda s: [gauge_identity_check(kind, s.matrix, s.ctx) for kind in (ModelKind.W, ModelKind.WPRIME)],
        lambda k: True, "identidades de gauge"),
    "scheme": CheckEntry(_scheme_reports, _has_scheme_layer, "axiomas de 𝒜 e 𝒜′"),
    "distance_regular": CheckEntry(
        lambda s: [distance_regular_check(s.matrix)], lambda k: k >= 2 and k % 2 == 0,
        "vetor de interseção do grafo de Hadamard"),
    "coherent": CheckEntry(
        lambda s: [coherent_config_check(s.matrix)[0]], _has_scheme_layer, "configuração coerente"),
    "rho": CheckEntry(
        lambda s: [rho_automorphism_check(s.matrix)], _has_scheme_layer, "automorfismo ρ"),
    "fusion": CheckEntry(
        lambda s: [fusion_check(s.matrix)], _has_scheme_layer, "fusão das órbitas de ρ"),
    "lemmas": CheckEntry(
        lambda s: [lemma_checks(s.matrix, s.ctx)], _has_scheme_layer, "lemas auxiliares"),
    "theorem": CheckEntry(
        lambda s: [verify_theorem(
            s.matrix, s.ctx, skip=not s.manifest.exhaustive_edges, show_progress=s.manifest.show_progress,
        )],
        lambda k: k >= THEOREM_MIN_K, "N(W) = 𝒜 e N(W′) = 𝒜′"),
    "sweep": CheckEntry(
        lambda s: [verify_sweep(s.matrix, s.ctx, show_progress=s.manifest.show_progress)],
        lambda k: k == THEOREM_MIN_K, "teorema para os 16 pares (ω, ξ)"),
    "remark": CheckEntry(
        lambda s: [verify_remark(s.k, backend=s.manifest.backend, show_progress=s.manifest.show_progress)],
        lambda k: k in REMARK_ORDERS, "comparação com ℤ/4 e ℤ/8"),
}


def load_hadamard(source: str, k: int) -> HadamardMatrix:
    """
    Obtém a matriz de Hadamard de ordem k a partir da origem declarada.

    Raises:
        OrderMismatch: Arquivo com ordem diferente de k
        ParseError: Arquivo mal formado
    """
    if source in ("sylvester", "paley"):
        return generate(k, source)
    if source == "bundled":
        return bundled(k)
    matrix = read_hadamard(source)
    if matrix.k != k:
        raise OrderMismatch("Ordem do arquivo diferente de k", order=matrix.k, k=k, source=source)
    return matrix


def error_report(check_id: str, error: Exception, k: Optional[int] = None) -> VerificationReport:
    """Converte uma exceção em relatório (ambiguous ou fail)."""
    if isinstance(error, (AmbiguousZero, AmbiguousEdge)):
        return VerificationReport.ambiguous(check_id, error, k=k)
    name = type(error).__name__
    context = {
        "message": getattr(error, "message", None) or str(error),
        **(getattr(error, "context", None) or {}),
    }
    return VerificationReport(
        check_id=check_id, k=k, verdict=Verdict.FAIL,
        witnesses=[{"error": name, **context}], error=name,
    )


def report_emit(report: VerificationReport, path: Union[str, Path]) -> Path:
    """
    Grava o relatório em JSON canônico e o tempo em arquivo lateral.

    O corpo não contém tempos, então execuções idênticas produzem
    arquivos idênticos byte a byte. Os tempos vão para
    ``<nome>.timing.json``.

    Args:
        report: Relatório
        path: Caminho do JSON

    Returns:
        Caminho gravado

    Raises:
        OSError: Caminho não gravável
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(canonical_json(report.canonical_body()), encoding="utf-8")
    path.with_name(f"{path.stem}.timing.json").write_text(
        canonical_json(report.timings()), encoding="utf-8"
    )
    logger.debug(f"Relatório {report.check_id} salvo em {path}")
    return path


def exit_code(reports: List[VerificationReport]) -> int:
    """0 se tudo passou, 2 se algo ficou ambíguo, 1 se algo falhou."""
    verdicts = {report.verdict for report in reports}
    if Verdict.AMBIGUOUS in verdicts:
        return 2
    if Verdict.FAIL in verdicts:
        return 1
    return 0


class VerificationRunner:
    """
    Executor do manifesto.

    Cada ordem k passa por: carga de H, criação do contexto e as
    verificações aplicáveis. Se H não for de Hadamard, as demais
    verificações da ordem são puladas.
    """

    def __init__(self, manifest: Optional[RunManifest] = None):
        self.manifest = manifest or RunManifest()
        self.output_dir = Path(self.manifest.output_dir)
        self.reports: List[VerificationReport] = []
        self.skipped: Dict[int, List[str]] = {}
        self.stats = {"pass": 0, "fail": 0, "ambiguous": 0}
        logger.info(
            f"VerificationRunner inicializado: k={self.manifest.k_values}, "
            f"verificações={self.manifest.checks}"
        )

    def _record(self, report: VerificationReport, k: int) -> None:
        if report.k is None:
            report = report.model_copy(update={"k": k})
        self.reports.append(report)
        self.stats[report.verdict.value] += 1
        log_check_result(report.check_id, report.k, report.verdict.value, report.timing)
        report_emit(report, self.output_dir / f"k{report.k}" / f"{report.check_id}.json")

    def _prepare(self, k: int) -> Optional[OrderRun]:
        manifest = self.manifest
        source = manifest.source_for(k)
        try:
            matrix = load_hadamard(source, k)
        except Exception as error:
            log_error_with_context(error, {"k": k, "source": source})
            self._record(error_report("hadamard.load", error, k), k)
            return None
        try:
            ctx = make_context(
                k, omega=manifest.omega, xi=manifest.xi,
                backend=manifest.backend, tolerance=manifest.tolerance,
            )
        except Exception as error:
            log_error_with_context(error, {"k": k})
            self._record(error_report("context", error, k), k)
            return None
        return OrderRun(k, matrix, ctx, manifest)

    def _run_check(self, check_id: str, state: OrderRun) -> List[VerificationReport]:
        try:
            return CHECK_REGISTRY[check_id].run(state)
        except SpinKitError as error:
            log_error_with_context(error, {"check": check_id, "k": state.k})
            return [error_report(check_id, error, state.k)]
        except Exception as error:
            logger.exception(f"Erro inesperado em {check_id} (k={state.k}): {error}")
            return [error_report(check_id, error, state.k)]

    def run_order(self, k: int) -> None:
        """Executa as verificações aplicáveis à ordem k."""
        planned = [c for c in self.manifest.checks if CHECK_REGISTRY[c].applies(k)]
        state = self._prepare(k)
        if state is None:
            self.skipped[k] = planned
            logger.warning(f"k={k}: verificações puladas {planned}")
            return

        show_progress = self.manifest.show_progress
        if show_progress is None:
            show_progress = get_settings().show_progress
        for position, check_id in enumerate(tqdm(planned, desc=f"k={k}", disable=not show_progress)):
            reports = self._run_check(check_id, state)
            for report in reports:
                self._record(report, k)
            if check_id == "hadamard" and not all(report.passed for report in reports):
                self.skipped[k] = planned[position + 1:]
                logger.warning(f"k={k}: H inválida, verificações puladas {self.skipped[k]}")
                return

    def write_summary(self) -> None:
        """Grava summary.json (determinístico) e summary.csv (com tempos)."""
        rows = [
            {
                "check_id": report.check_id,
                "k": report.k,
                "verdict": report.verdict.value,
                "error": report.error,
                "witnesses": len(report.witnesses),
                "ambiguity_count": report.ambiguity_count,
            }
            for report in self.reports
        ]
        self.output_dir.mkdir(parents=True, exist_ok=True)
        summary = {
            "reports": rows,
            "skipped": {str(k): checks for k, checks in self.skipped.items()},
            "exit_code": exit_code(self.reports),
        }
        (self.output_dir / "summary.json").write_text(canonical_json(summary), encoding="utf-8")

        frame = pd.DataFrame(rows, columns=["check_id", "k", "verdict", "error", "witnesses", "ambiguity_count"])
        frame["timing"] = [report.timing for report in self.reports]
        frame.to_csv(self.output_dir / "summary.csv", index=False)
        logger.info(f"Resumo salvo em {self.output_dir}")

    def run(self) -> List[VerificationReport]:
        """Executa todas as ordens e grava o resumo. Nunca lança."""
        for k in self.manifest.k_values:
            self.run_order(k)
        try:
            self.write_summary()
        except OSError as error:
            log_error_with_context(error, {"output_dir": str(self.output_dir)})
        logger.info(f"Execução concluída: {self.stats}")
        return self.reports


def verify_all(manifest: Optional[RunManifest] = None) -> List[VerificationReport]:
    """
    Executa o manifesto completo.

    Returns:
        Relatórios na ordem de execução (falhas viram relatórios)
    """
    return VerificationRunner(manifest).run()
