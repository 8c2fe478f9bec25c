"""
Teorema, Varredura e Observação
===============================

Verificação de ponta a ponta das álgebras de Nomura dos modelos W
e W′: N(W) é a álgebra de Bose–Mesner de {R₀..R₄} e N(W′) a da
fusão {R₀, R′₁, R₂, R′₃, R₄}, para k ≥ 4. Para k = 1 e k = 2 as
álgebras são comparadas com os esquemas cíclicos ℤ/4 e ℤ/8.

Autor: Seu Nome
Data: 2025-09-20
"""

import itertools
from typing import Dict, Optional, Sequence

from tqdm import tqdm

from arithmetic import LaurentScalar, ScalarContext, ZeroVerdict, is_zero, make_context
from arithmetic.context import OMEGA_EXPONENTS, XI_EXPONENTS
from config import get_settings
from hadamard import HadamardMatrix, sylvester
from models import ModelKind, build_model
from models.builders import MINUS_U_INV, U_CUBE
from nomura import NomuraResult, membership_test, nomura_algebra
from schemes import (
    Relation,
    build_relations,
    cyclic_scheme,
    scheme_check,
    scheme_family,
    support_family_isomorphism,
    tensor_isomorphism,
    thin_group_orders,
)
from utils.exceptions import AmbiguousZero, PreconditionFailed
from utils.helpers import stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport

logger = setup_logger(__name__)

THEOREM_MIN_K = 4
REMARK_ORDERS = (1, 2)


def _fields(ctx: ScalarContext, matrix: Optional[HadamardMatrix] = None) -> Dict:
    parameters = dict(ctx.parameters)
    if matrix is not None:
        parameters["source"] = matrix.source
    return {"k": ctx.k, "backend": ctx.backend, "parameters": parameters}


def _family_clause(clause: str, result: NomuraResult, family: Sequence[Relation],
                   ctx: ScalarContext, matrix: HadamardMatrix) -> VerificationReport:
    """Compara a base de N(M) com uma família de relações como conjunto de suportes."""
    witnesses = []
    if not result.partition.same_family([relation.matrix for relation in family]):
        witnesses.append({
            "clause": clause,
            "dimension": result.dimension,
            "found_sizes": sorted(result.partition.sizes()),
            "expected_sizes": sorted(relation.size for relation in family),
        })
    return VerificationReport.from_outcome(
        f"theorem.clause_{clause}", witnesses, error="VerificationFailed",
        details={**result.details(), "family": [relation.name for relation in family]},
        **_fields(ctx, matrix),
    )


def _membership_clause(results: Sequence[NomuraResult], models, ctx: ScalarContext,
                       matrix: HadamardMatrix) -> VerificationReport:
    """Cada matriz de base passa pelo teste direto de autovetores."""
    subreports = []
    for result, model in zip(results, models):
        for index, basis_matrix in enumerate(result.basis):
            subreports.append(membership_test(basis_matrix, model, ctx, label=f"C{index}"))
    report = VerificationReport.from_subreports(
        "theorem.clause_iii", subreports,
        timing=sum(sub.timing for sub in subreports), **_fields(ctx, matrix),
    )
    if not report.passed:
        report.witnesses = [{"clause": "iii", **w} for w in report.witnesses]
    return report


def coefficient_distinctness(ctx: ScalarContext) -> VerificationReport:
    """
    Verifica que os coeficientes {ξ, −u⁻¹, −ξ, u³} de W′ são distintos dois a dois.

    Raises:
        AmbiguousZero: Diferença com teste de zero ambíguo
    """
    xi = ctx.xi_monomial
    coefficients = {"xi": xi, "-u^-1": MINUS_U_INV, "-xi": -xi, "u^3": U_CUBE}
    witnesses = []
    verdicts = {}
    for (left_name, left), (right_name, right) in itertools.combinations(coefficients.items(), 2):
        difference = LaurentScalar.from_monomial(ctx.k, left) - LaurentScalar.from_monomial(ctx.k, right)
        verdict = is_zero(difference, ctx)
        verdicts[f"{left_name}|{right_name}"] = verdict.name
        if verdict == ZeroVerdict.AMBIGUOUS:
            raise AmbiguousZero(
                "Teste de zero ambíguo entre coeficientes", left=left_name, right=right_name
            )
        if verdict == ZeroVerdict.ZERO and not witnesses:
            witnesses.append({"clause": "iv", "left": left_name, "right": right_name})

    return VerificationReport.from_outcome(
        "theorem.clause_iv", witnesses, error="VerificationFailed",
        details={"coefficients": {name: str(value) for name, value in coefficients.items()},
                 "zero_tests": verdicts},
        **_fields(ctx),
    )


def _self_membership(models: Sequence, ctx: ScalarContext, matrix: HadamardMatrix) -> VerificationReport:
    subreports = [membership_test(model, model, ctx, label=model.label) for model in models]
    return VerificationReport.from_subreports(
        "theorem.self_membership", subreports,
        timing=sum(sub.timing for sub in subreports), **_fields(ctx, matrix),
    )


def _gauge_partitions(results: Sequence[NomuraResult], matrix: HadamardMatrix, ctx: ScalarContext,
                      skip: Optional[bool], show_progress: Optional[bool]) -> VerificationReport:
    """N(W) = N(W̃) e N(W′) = N(W̃′ᵀ) como partições de pares."""
    plain, primed = results
    tilde = nomura_algebra(build_model(ModelKind.WTILDE, matrix, ctx), ctx, skip, show_progress)
    tilde_prime = nomura_algebra(
        build_model(ModelKind.WTILDE_PRIME, matrix, ctx).transpose(), ctx, skip, show_progress
    )
    witnesses = []
    if plain.partition != tilde.partition:
        witnesses.append({"clause": "gauge_partitions", "left": "W", "right": "Wtilde"})
    if primed.partition != tilde_prime.partition:
        witnesses.append({"clause": "gauge_partitions", "left": "Wprime", "right": "WtildePrime^T"})
    return VerificationReport.from_outcome(
        "theorem.gauge_partitions", witnesses, error="VerificationFailed",
        details={"Wtilde": tilde.dimension, "WtildePrime^T": tilde_prime.dimension},
        **_fields(ctx, matrix),
    )


def verify_theorem(
    matrix: HadamardMatrix,
    ctx: ScalarContext,
    skip: Optional[bool] = None,
    show_progress: Optional[bool] = None,
) -> VerificationReport:
    """
    Verifica N(W) = 𝒜 e N(W′) = 𝒜′ para uma matriz de Hadamard.

    Cláusulas: (i) base de N(W) = {R₀..R₄}; (ii) base de N(W′) =
    {R₀, R′₁, R₂, R′₃, R₄}; (iii) cada matriz de base passa pelo
    teste de pertinência; (iv) coeficientes de W′ distintos. Além
    disso: W ∈ N(W), W′ ∈ N(W′) e invariância das partições por gauge.

    Args:
        matrix: Matriz de Hadamard de ordem k ≥ 4
        ctx: Contexto escalar de ordem k
        skip: Salto de arestas já conectadas no grafo
        show_progress: Barras de progresso

    Returns:
        Relatório 'theorem' com um sub-relatório por cláusula

    Raises:
        PreconditionFailed: k < 4
        AmbiguousEdge: Propagado do grafo de Nomura
    """
    if matrix.k < THEOREM_MIN_K:
        raise PreconditionFailed(
            f"O teorema exige k ≥ {THEOREM_MIN_K}", k=matrix.k
        )

    with stopwatch() as elapsed:
        relations = build_relations(matrix)
        models = [build_model(ModelKind.W, matrix, ctx), build_model(ModelKind.WPRIME, matrix, ctx)]
        results = [nomura_algebra(model, ctx, skip, show_progress) for model in models]

        subreports = [
            _family_clause("i", results[0], scheme_family(relations, "A"), ctx, matrix),
            _family_clause("ii", results[1], scheme_family(relations, "Aprime"), ctx, matrix),
            _membership_clause(results, models, ctx, matrix),
            coefficient_distinctness(ctx),
            _self_membership(models, ctx, matrix),
            _gauge_partitions(results, matrix, ctx, skip, show_progress),
        ]

    report = VerificationReport.from_subreports(
        "theorem", subreports, timing=elapsed[0],
        details={
            "dimensions": {"W": results[0].dimension, "Wprime": results[1].dimension},
            "class_sizes": {"W": results[0].partition.sizes(), "Wprime": results[1].partition.sizes()},
        },
        **_fields(ctx, matrix),
    )
    logger.info(f"Teorema (k={ctx.k}, ω={ctx.omega}, ξ={ctx.xi}): {report.verdict.value}")
    return report


def verify_sweep(
    matrix: HadamardMatrix,
    ctx: Optional[ScalarContext] = None,
    show_progress: Optional[bool] = None,
) -> VerificationReport:
    """
    Executa ``verify_theorem`` para os 4 valores de ω e os 4 de ξ.

    Returns:
        Relatório 'theorem.sweep' com 16 sub-relatórios
    """
    ctx = ctx or make_context(matrix.k)
    show_progress = get_settings().show_progress if show_progress is None else show_progress
    combinations = list(itertools.product(OMEGA_EXPONENTS, XI_EXPONENTS))
    subreports = []

    with stopwatch() as elapsed:
        for omega, xi in tqdm(combinations, desc="Varredura ω×ξ", disable=not show_progress):
            variant = ctx.with_parameters(omega=omega, xi=xi)
            report = verify_theorem(matrix, variant, show_progress=False)
            subreports.append(report.model_copy(update={"check_id": f"theorem.omega{omega}.xi{xi}"}))

    report = VerificationReport.from_subreports(
        "theorem.sweep", subreports, timing=elapsed[0],
        details={"combinations": [list(c) for c in combinations]},
        **_fields(ctx, matrix),
    )
    logger.info(f"Varredura ω×ξ (k={ctx.k}): {report.verdict.value}")
    return report


def _remark_model(kind: ModelKind, matrix: HadamardMatrix, ctx: ScalarContext, target,
                  target_tensor, show_progress: Optional[bool]):
    model = build_model(kind, matrix, ctx)
    result = nomura_algebra(model, ctx, show_progress=show_progress)
    relations = [Relation(f"N{i}", basis) for i, basis in enumerate(result.basis)]
    scheme_report, tensor = scheme_check(relations, f"N({kind.value})")
    identity = int(scheme_report.details.get("identity", 0))
    orders = thin_group_orders(tensor, identity) if tensor is not None else None
    expected = len(target.relations)

    mapping = None
    if ctx.k == 1:
        comparison = "support_family"
        mapping = support_family_isomorphism(result.basis, target.matrices)
    else:
        comparison = "intersection_tensor"
        if tensor is not None:
            mapping = tensor_isomorphism(tensor, target_tensor, identity, target.identity_index)

    witnesses = []
    if result.dimension != expected:
        witnesses.append({"reason": "dimension", "found": result.dimension, "expected": expected})
    elif tensor is None:
        witnesses.append({"reason": "not_a_scheme"})
    elif mapping is None:
        witnesses.append({"reason": comparison, "group_orders": orders})

    report = VerificationReport.from_outcome(
        f"remark.{kind.value}", witnesses, error="VerificationFailed",
        details={
            **result.details(),
            "target": target.name,
            "comparison": comparison,
            "relabeling": list(mapping) if mapping else None,
            "group_orders": orders,
        },
        subreports=[scheme_report],
        **_fields(ctx, matrix),
    )
    return report, result


def verify_remark(
    k: int,
    backend: Optional[str] = None,
    show_progress: Optional[bool] = None,
) -> VerificationReport:
    """
    Compara N(W) e N(W′) com o esquema de ℤ/4k para k = 1 e k = 2.

    k = 1: dimensão 4 e família de suportes igual à de ℤ/4 após
    reindexação dos vértices, além de N(W) = N(W′). k = 2: dimensão 8
    e tensor de interseção de ℤ/8 a menos de reindexação de classes.
    O relatório registra as ordens dos elementos do grupo de cada
    esquema fino.

    Args:
        k: 1 ou 2
        backend: Backend do contexto (padrão: ciclotômico)

    Raises:
        PreconditionFailed: k fora de {1, 2}
    """
    if k not in REMARK_ORDERS:
        raise PreconditionFailed("A observação trata apenas k = 1 e k = 2", k=k)

    matrix = sylvester(k.bit_length() - 1)
    ctx = make_context(k, backend=backend)
    target = cyclic_scheme(4 * k)

    with stopwatch() as elapsed:
        target_report, target_tensor = scheme_check(target.relations, target.name)
        target_report.raise_for_verdict()

        subreports = []
        results = []
        for kind in (ModelKind.W, ModelKind.WPRIME):
            report, result = _remark_model(kind, matrix, ctx, target, target_tensor, show_progress)
            subreports.append(report)
            results.append(result)

        if k == 1:
            witnesses = []
            if results[0].partition != results[1].partition:
                witnesses.append({"reason": "N(W) != N(Wprime)"})
            subreports.append(VerificationReport.from_outcome(
                "remark.equal", witnesses, error="VerificationFailed", **_fields(ctx, matrix),
            ))

    report = VerificationReport.from_subreports(
        f"remark.k{k}", subreports, timing=elapsed[0],
        details={
            "target": target.name,
            "isomorphism_notion": "support_family" if k == 1 else "intersection_tensor",
            "dimensions": {"W": results[0].dimension, "Wprime": results[1].dimension},
        },
        **_fields(ctx, matrix),
    )
    logger.info(f"Observação k={k}: {report.verdict.value}")
    return report
