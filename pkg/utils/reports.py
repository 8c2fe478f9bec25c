"""
Relatórios de Verificação
=========================

Modelo pydantic compartilhado por todas as verificações
(Hadamard, modelos, esquemas, Nomura e teorema).

Autor: Seu Nome
Data: 2025-09-20
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .exceptions import (
    ERRORS_BY_NAME,
    AmbiguousZero,
    LemmaFailed,
    SpinKitError,
    VerificationFailed,
)
from .helpers import to_jsonable


class Verdict(str, Enum):
    """Veredito de uma verificação."""

    PASS = "pass"
    FAIL = "fail"
    AMBIGUOUS = "ambiguous"


class VerificationReport(BaseModel):
    """
    Registro estruturado de uma verificação.

    ``timing`` fica fora do corpo canônico (ver ``canonical_body``).
    """

    check_id: str
    k: Optional[int] = None
    backend: Optional[str] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)
    verdict: Verdict = Verdict.PASS
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)
    ambiguity_count: int = 0
    error: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    subreports: List["VerificationReport"] = Field(default_factory=list)
    timing: float = 0.0

    @field_validator("parameters", "details", mode="before")
    @classmethod
    def normalize_mapping(cls, v):
        """Converte valores numpy/Fraction para tipos JSON."""
        return to_jsonable(v or {})

    @field_validator("witnesses", mode="before")
    @classmethod
    def normalize_witnesses(cls, v):
        """Converte testemunhas para tipos JSON."""
        return to_jsonable(list(v or []))

    @model_validator(mode="after")
    def check_pass_is_clean(self):
        """pass implica zero testemunhas e zero ambiguidades."""
        if self.verdict == Verdict.PASS and (self.witnesses or self.ambiguity_count):
            raise ValueError("Relatório 'pass' não pode ter testemunhas nem ambiguidades")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    @classmethod
    def from_outcome(
        cls,
        check_id: str,
        witnesses: List[Dict[str, Any]],
        error: Optional[str] = None,
        **fields: Any,
    ) -> "VerificationReport":
        """
        Cria relatório com veredito derivado das testemunhas.

        Args:
            check_id: Identificador da verificação
            witnesses: Contraexemplos encontrados (vazio = pass)
            error: Nome da exceção associada à falha
            **fields: Demais campos do relatório

        Returns:
            Relatório com veredito pass ou fail
        """
        if witnesses:
            return cls(
                check_id=check_id, verdict=Verdict.FAIL, witnesses=witnesses,
                error=error, **fields,
            )
        return cls(check_id=check_id, verdict=Verdict.PASS, **fields)

    @classmethod
    def from_subreports(
        cls, check_id: str, subreports: List["VerificationReport"], **fields: Any
    ) -> "VerificationReport":
        """
        Agrega sub-relatórios: ambiguous domina fail, que domina pass.

        Args:
            check_id: Identificador do relatório agregado
            subreports: Relatórios componentes

        Returns:
            Relatório agregado
        """
        ambiguity = sum(report.ambiguity_count for report in subreports)
        failing = [report for report in subreports if not report.passed]
        if any(report.verdict == Verdict.AMBIGUOUS for report in subreports):
            verdict = Verdict.AMBIGUOUS
        elif failing:
            verdict = Verdict.FAIL
        else:
            verdict = Verdict.PASS

        witnesses = [
            {"subreport": report.check_id, **(report.witnesses[0] if report.witnesses else {})}
            for report in failing
        ]
        error = failing[0].error if failing else None
        return cls(
            check_id=check_id, verdict=verdict, witnesses=witnesses,
            ambiguity_count=ambiguity, error=error, subreports=subreports, **fields,
        )

    def raise_for_verdict(self) -> "VerificationReport":
        """
        Lança a exceção correspondente se o relatório não for pass.

        Returns:
            O próprio relatório (quando pass)

        Raises:
            AmbiguousZero: Se o veredito for ambiguous
            SpinKitError: Subclasse indicada em ``error`` (padrão VerificationFailed)
        """
        if self.verdict == Verdict.PASS:
            return self

        witness = self.witnesses[0] if self.witnesses else {}
        if self.verdict == Verdict.AMBIGUOUS:
            raise AmbiguousZero(f"Verificação '{self.check_id}' ambígua", **witness)
        if self.error == "LemmaFailed":
            raise LemmaFailed(
                f"Verificação '{self.check_id}' falhou",
                lemma=str(witness.get("subreport", self.check_id)),
                witness=witness,
            )

        error_cls = ERRORS_BY_NAME.get(self.error or "", VerificationFailed)
        raise error_cls(f"Verificação '{self.check_id}' falhou", **witness)

    def canonical_body(self) -> Dict[str, Any]:
        """Corpo canônico do relatório, sem campos de tempo (em qualquer nível)."""
        body = self.model_dump(mode="json")

        def strip(node: Dict[str, Any]) -> Dict[str, Any]:
            node.pop("timing", None)
            node["subreports"] = [strip(child) for child in node.get("subreports", [])]
            return node

        return strip(body)

    def timings(self) -> Dict[str, float]:
        """Tempos do relatório e dos sub-relatórios, por check_id."""
        collected = {self.check_id: self.timing}
        for child in self.subreports:
            for key, value in child.timings().items():
                collected[f"{self.check_id}/{key}"] = value
        return collected

    @classmethod
    def ambiguous(cls, check_id: str, error: SpinKitError, **fields: Any) -> "VerificationReport":
        """Relatório ambiguous a partir de AmbiguousZero/AmbiguousEdge."""
        return cls(
            check_id=check_id,
            verdict=Verdict.AMBIGUOUS,
            witnesses=[{"error": type(error).__name__, **error.context}],
            ambiguity_count=max(1, int(error.context.get("ambiguous", 1))),
            error=type(error).__name__,
            **fields,
        )


VerificationReport.model_rebuild()
