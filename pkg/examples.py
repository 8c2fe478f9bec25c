#!/usr/bin/env python3
"""
Exemplos de Uso do SpinKit
==========================

Este arquivo contém exemplos práticos de como usar a biblioteca:
matrizes de Hadamard, modelos de spin, esquemas de associação,
álgebras de Nomura e verificações de ponta a ponta.

Autor: Seu Nome
Data: 2025-09-20
"""

import pandas as pd

from arithmetic import make_context
from config.settings import get_settings
from hadamard import paley1, sylvester, validate
from models import ModelKind, available_models, build_model, type2_check, type3_check
from nomura import membership_test, nomura_algebra
from schemes import (
    build_relations,
    distance_regular_check,
    fuse_rho_orbits,
    intersection_array,
    scheme_check,
    scheme_family,
)
from utils.logger import setup_logger
from verify import RunManifest, verify_all, verify_remark, verify_theorem

logger = setup_logger(__name__)


def exemplo_hadamard():
    """
    Exemplo básico de matrizes de Hadamard.
    """
    print("🔢 Exemplo 1: Matrizes de Hadamard")
    print("=" * 50)

    for matrix in (sylvester(2), sylvester(3), paley1(11)):
        report = validate(matrix)
        print(f"  {matrix.source}: ordem {matrix.k} → {report.verdict.value}")

    corrompida = sylvester(2).flipped(0, 0)
    report = validate(corrompida)
    print(f"  {corrompida.source}: {report.verdict.value} | testemunha {report.witnesses[0]}")


def exemplo_modelos():
    """
    Exemplo de construção e validação dos modelos de spin.
    """
    print("🧲 Exemplo 2: Modelos de Spin")
    print("=" * 50)

    matrix = sylvester(2)
    ctx = make_context(4)
    print(f"Modelos disponíveis: {', '.join(available_models())}")

    for kind in (ModelKind.W, ModelKind.WPRIME):
        model = build_model(kind, matrix, ctx)
        tipo2 = type2_check(model, ctx)
        tipo3 = type3_check(model, ctx)
        print(f"  {kind.value}: lado {model.n}")
        print(f"    tipo II: {tipo2.verdict.value} (constante {tipo2.details['constant']})")
        print(f"    tipo III: {tipo3.verdict.value} (d = {tipo3.details['d']})")


def exemplo_esquemas():
    """
    Exemplo com o grafo de Hadamard e a fusão por ρ.
    """
    print("🕸️ Exemplo 3: Esquemas de Associação")
    print("=" * 50)

    matrix = sylvester(2)
    relations = build_relations(matrix)
    for which in ("A", "Aprime"):
        report, tensor = scheme_check(scheme_family(relations, which), which)
        print(f"  {which}: {report.verdict.value} | valências {report.details['valencies']}")
        if which == "A":
            b, c = intersection_array(tensor)
            print(f"    vetor de interseção: {{{b}; {c}}}")

    print(f"  Distância-regular: {distance_regular_check(matrix).verdict.value}")
    fused = fuse_rho_orbits(matrix)
    print(f"  Fusão das órbitas de ρ: {', '.join(fused.names)}")


def exemplo_nomura():
    """
    Exemplo de cálculo das álgebras de Nomura.
    """
    print("🧮 Exemplo 4: Álgebras de Nomura")
    print("=" * 50)

    matrix = sylvester(2)
    ctx = make_context(4, xi=3)
    for kind in (ModelKind.W, ModelKind.WPRIME):
        model = build_model(kind, matrix, ctx)
        result = nomura_algebra(model, ctx, show_progress=False)
        print(f"  N({kind.value}): dimensão {result.dimension}, classes {result.partition.sizes()}")
        report = membership_test(model, model, ctx, label=kind.value)
        print(f"    {kind.value} ∈ N({kind.value}): {report.verdict.value}")


def exemplo_teorema():
    """
    Exemplo do teorema principal em k = 4.
    """
    print("📜 Exemplo 5: Teorema (k = 4)")
    print("=" * 50)

    report = verify_theorem(sylvester(2), make_context(4), show_progress=False)
    print(f"Veredito: {report.verdict.value}")
    for sub in report.subreports:
        print(f"  {sub.check_id}: {sub.verdict.value}")


def exemplo_observacao():
    """
    Exemplo da comparação com ℤ/4 e ℤ/8.
    """
    print("🔁 Exemplo 6: Observação (k = 1 e k = 2)")
    print("=" * 50)

    for k in (1, 2):
        report = verify_remark(k, show_progress=False)
        print(f"k={k}: {report.verdict.value} | dimensões {report.details['dimensions']}")
        for sub in report.subreports:
            orders = sub.details.get("group_orders")
            print(f"  {sub.check_id}: {sub.verdict.value} | ordens {orders}")


def exemplo_configuracoes():
    """
    Exemplo de uso de configurações.
    """
    print("⚙️ Exemplo 7: Configurações")
    print("=" * 50)

    settings = get_settings()

    print("Configurações atuais:")
    print(f"  App: {settings.app_name} v{settings.app_version}")
    print(f"  Precisão: {settings.precision} dígitos")
    print(f"  Tolerância: {settings.tolerance}")
    print(f"  Backend padrão: {settings.default_backend or 'automático'}")
    print(f"  Ordens k: {settings.k_values}")

    print("\nAmostragem:")
    for key, value in settings.sampling_config().items():
        print(f"  {key}: {value}")


def exemplo_exportar_relatorios():
    """
    Exemplo de execução de manifesto com exportação dos relatórios.
    """
    print("💾 Exemplo 8: Exportar Relatórios")
    print("=" * 50)

    manifest = RunManifest(
        checks=["hadamard", "type2", "scheme", "theorem"],
        k_values=[4],
        output_dir="reports/exemplos",
        show_progress=False,
    )
    reports = verify_all(manifest)
    print(f"{len(reports)} relatórios gravados em {manifest.output_dir}")

    resumo = pd.read_csv(f"{manifest.output_dir}/summary.csv")
    print(resumo[["check_id", "k", "verdict"]].to_string(index=False))


def main():
    """
    Função principal que executa os exemplos.
    """
    print("🧲 SpinKit - Exemplos")
    print("=" * 60)
    print("Este arquivo demonstra diferentes formas de usar a biblioteca.")
    print("=" * 60)

    exemplos = [
        ("1", "Matrizes de Hadamard", exemplo_hadamard),
        ("2", "Modelos de Spin", exemplo_modelos),
        ("3", "Esquemas de Associação", exemplo_esquemas),
        ("4", "Álgebras de Nomura", exemplo_nomura),
        ("5", "Teorema", exemplo_teorema),
        ("6", "Observação", exemplo_observacao),
        ("7", "Configurações", exemplo_configuracoes),
        ("8", "Exportar Relatórios", exemplo_exportar_relatorios),
    ]

    print("\nExemplos disponíveis:")
    for num, nome, _ in exemplos:
        print(f"  {num}. {nome}")

    print("\nDigite o número do exemplo (ou 'todos' para executar todos):")
    escolha = input("> ").strip().lower()

    for num, nome, func in exemplos:
        if escolha not in ("todos", num):
            continue
        print(f"\n{'=' * 60}")
        print(f"Executando exemplo {num}: {nome}")
        print(f"{'=' * 60}")
        try:
            func()
        except Exception as e:
            print(f"Erro no exemplo {num}: {e}")
        if escolha == num:
            return

    if escolha != "todos":
        print("Exemplo não encontrado!")


if __name__ == "__main__":
    main()
