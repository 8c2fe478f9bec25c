#!/usr/bin/env python3
"""
SpinKit - Script Principal

Linha de comando para gerar matrizes de Hadamard, construir os
modelos de spin, verificar esquemas, calcular álgebras de Nomura e
executar as verificações de ponta a ponta.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

sys.path.append(str(Path(__file__).parent))

from arithmetic import make_context
from config.settings import get_settings
from hadamard import generate, read_hadamard, serialize, write_hadamard
from linalg import dump_matrix, load_matrix
from models import MODEL_ALIASES, build_model
from nomura import nomura_algebra
from schemes import build_relations, coherent_config_check, scheme_check, scheme_family
from utils.exceptions import SpinKitError
from utils.helpers import canonical_json, format_duration, parse_int_list
from utils.logger import configure_log_level, setup_logger
from utils.reports import Verdict, VerificationReport
from verify import RunManifest, exit_code, report_emit, verify_all

logger = setup_logger(__name__)

VERDICT_ICONS = {"pass": "✅", "fail": "❌", "ambiguous": "⚠️"}


def _add_scalar_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--omega", type=int, choices=[0, 1, 2, 3], help="Expoente o de ω = i^o")
    parser.add_argument("--xi", type=int, help="Expoente e de ξ = ζ₈^e (1, 3, 5 ou 7)")
    parser.add_argument(
        "--backend", choices=["cyclotomic", "laurent_hybrid", "numeric"],
        help="Backend do teste de zero (padrão: escolhido pelo modo de u)",
    )
    parser.add_argument("--tol", type=float, help="Tolerância numérica (padrão: configurações)")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse argumentos da linha de comando."""
    parser = argparse.ArgumentParser(
        description="SpinKit - Modelos de spin de Hadamard e álgebras de Nomura",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemplos de uso:
  python main.py gen-hadamard --order 8 --method sylvester --out h8.txt
  python main.py build-model --kind Wp --hadamard h8.txt --xi 3 --out wp.json
  python main.py check-scheme --which Aprime --hadamard h8.txt
  python main.py nomura --kind W --k 4 --out nomura_w.json
  python main.py verify --all --k 1,2,4 --out reports
  python main.py verify --theorem --k 8 --backend laurent_hybrid
  python main.py verify --remark 1
        """
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Nível de log (padrão: configurações)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen-hadamard", help="Gerar matriz de Hadamard")
    gen.add_argument("--order", type=int, required=True, help="Ordem k")
    gen.add_argument("--method", choices=["sylvester", "paley"], default="sylvester",
                     help="Construção (padrão: sylvester)")
    gen.add_argument("--out", help="Arquivo de saída no formato '+/-' (padrão: stdout)")

    build = subparsers.add_parser("build-model", help="Construir modelo de spin")
    build.add_argument("--kind", required=True, choices=sorted(MODEL_ALIASES), help="Modelo")
    build.add_argument("--hadamard", help="Arquivo '+/-' (padrão: Sylvester de ordem --k)")
    build.add_argument("--k", type=int, default=4, help="Ordem quando --hadamard não é dado (padrão: 4)")
    build.add_argument("--out", help="Arquivo JSON de saída (padrão: stdout)")
    _add_scalar_arguments(build)

    scheme = subparsers.add_parser("check-scheme", help="Verificar esquema de associação")
    scheme.add_argument("--which", choices=["A", "Aprime", "cc"], default="A", help="Família")
    scheme.add_argument("--hadamard", help="Arquivo '+/-' (padrão: Sylvester de ordem --k)")
    scheme.add_argument("--k", type=int, default=4, help="Ordem quando --hadamard não é dado")
    scheme.add_argument("--out", help="Relatório JSON de saída")

    nomura = subparsers.add_parser("nomura", help="Calcular álgebra de Nomura")
    source = nomura.add_mutually_exclusive_group(required=True)
    source.add_argument("--model", help="Matriz JSON gerada por build-model")
    source.add_argument("--kind", choices=sorted(MODEL_ALIASES), help="Modelo a construir")
    nomura.add_argument("--hadamard", help="Arquivo '+/-' para --kind")
    nomura.add_argument("--k", type=int, help="Ordem (padrão: 4, ou lado/4 do arquivo --model)")
    nomura.add_argument("--out", help="Relatório JSON de saída")
    nomura.add_argument("--exhaustive-edges", action="store_true",
                        help="Avalia todas as arestas (sem salto de componentes)")
    _add_scalar_arguments(nomura)

    verify = subparsers.add_parser("verify", help="Executar verificações")
    mode = verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--all", action="store_true", help="Todas as verificações")
    mode.add_argument("--lemma", type=int, choices=[2, 3, 4, 5], help="Um lema auxiliar")
    mode.add_argument("--theorem", action="store_true", help="Teorema principal (k ≥ 4)")
    mode.add_argument("--remark", type=int, choices=[1, 2], help="Observação para k = 1 ou 2")
    verify.add_argument("--k", help="Lista de ordens, ex.: 1,2,4,8 (padrão: configurações)")
    verify.add_argument("--hadamard", help="Arquivo '+/-' usado na sua ordem")
    verify.add_argument("--out", help="Diretório dos relatórios (padrão: configurações)")
    verify.add_argument("--exhaustive-edges", action="store_true",
                        help="Avalia todas as arestas do grafo de Nomura")
    _add_scalar_arguments(verify)

    return parser.parse_args(argv)


def _hadamard(args: argparse.Namespace):
    if args.hadamard:
        return read_hadamard(args.hadamard)
    return generate(args.k or 4, "sylvester")


def _emit(report: VerificationReport, out: Optional[str]):
    if out:
        report_emit(report, out)
        logger.info(f"Relatório salvo em: {out}")
    else:
        print(canonical_json(report.canonical_body()), end="")


def cmd_gen_hadamard(args: argparse.Namespace) -> int:
    matrix = generate(args.order, args.method)
    if args.out:
        write_hadamard(matrix, args.out)
        print(f"✅ Matriz de ordem {matrix.k} ({matrix.source}) salva em {args.out}")
    else:
        print(serialize(matrix), end="")
    return 0


def cmd_build_model(args: argparse.Namespace) -> int:
    matrix = _hadamard(args)
    ctx = make_context(matrix.k, omega=args.omega, xi=args.xi, backend=args.backend, tolerance=args.tol)
    model = build_model(args.kind, matrix, ctx)
    if args.out:
        dump_matrix(model, args.out)
        print(f"✅ Modelo {model.label} (lado {model.n}) salvo em {args.out}")
    else:
        print(json.dumps(model.to_dict(), ensure_ascii=False))
    return 0


def cmd_check_scheme(args: argparse.Namespace) -> int:
    matrix = _hadamard(args)
    if args.which == "cc":
        report, _ = coherent_config_check(matrix)
    else:
        report, _ = scheme_check(scheme_family(build_relations(matrix), args.which), args.which)
    _emit(report, args.out)
    display_summary([report], f"Esquema {args.which} (k={matrix.k})")
    return exit_code([report])


def cmd_nomura(args: argparse.Namespace) -> int:
    if args.model:
        k = args.k or json.loads(Path(args.model).read_text(encoding="utf-8"))["n"] // 4
        ctx = make_context(k, omega=args.omega, xi=args.xi, backend=args.backend, tolerance=args.tol)
        model = load_matrix(args.model, k, label=Path(args.model).stem)
    else:
        matrix = _hadamard(args)
        ctx = make_context(matrix.k, omega=args.omega, xi=args.xi, backend=args.backend, tolerance=args.tol)
        model = build_model(args.kind, matrix, ctx)

    result = nomura_algebra(model, ctx, skip=not args.exhaustive_edges)
    report = VerificationReport(
        check_id=f"nomura.{model.label}", k=ctx.k, backend=ctx.backend,
        parameters=ctx.parameters, details=result.details(),
    )
    _emit(report, args.out)

    print("\n" + "=" * 60)
    print(f"🧮 ÁLGEBRA DE NOMURA: N({model.label})")
    print("=" * 60)
    print(f"📐 Dimensão: {result.dimension}")
    print(f"📦 Tamanhos das classes: {result.partition.sizes()}")
    print(f"🔍 Arestas avaliadas: {result.partition.evaluated_edges}")
    print(f"⚠️  Testes ambíguos: {result.ambiguity_count}")
    return 0


def _verify_manifest(args: argparse.Namespace) -> RunManifest:
    settings = get_settings()
    k_values = parse_int_list(args.k) if args.k else list(settings.k_values)
    hadamard = {}
    if args.hadamard:
        order = read_hadamard(args.hadamard).k
        if not args.k:
            k_values = [order]
        hadamard[order] = args.hadamard

    if args.all:
        checks = ["all"]
    elif args.lemma:
        checks = ["hadamard", "lemmas"]
    elif args.theorem:
        checks = ["hadamard", "theorem"]
        k_values = [k for k in k_values if k >= 4] or [4]
    else:
        checks = ["remark"]
        k_values = [args.remark]

    return RunManifest(
        checks=checks, k_values=k_values, hadamard=hadamard,
        output_dir=args.out or settings.output_dir,
        omega=args.omega, xi=args.xi, backend=args.backend, tolerance=args.tol,
        exhaustive_edges=args.exhaustive_edges,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    manifest = _verify_manifest(args)
    reports = verify_all(manifest)

    if args.lemma:
        wanted = f"lemma{args.lemma}"
        selected = [
            sub.model_copy(update={"k": report.k})
            for report in reports for sub in report.subreports if sub.check_id == wanted
        ]
        # relatórios sem sub-relatórios (H inválida, erros) continuam visíveis
        reports = selected + [r for r in reports if r.check_id != "lemma_checks"]

    display_summary(reports, f"Verificação ({', '.join(manifest.checks)})")
    print(f"\n📁 Relatórios em: {manifest.output_dir}")
    return exit_code(reports)


def display_summary(reports: List[VerificationReport], title: str):
    """Exibe resumo dos relatórios."""
    print("\n" + "=" * 60)
    print(f"📊 RESUMO: {title}")
    print("=" * 60)

    if not reports:
        print("❌ Nenhuma verificação executada")
        return

    for report in reports:
        icon = VERDICT_ICONS[report.verdict.value]
        line = f"  {icon} k={report.k} | {report.check_id}: {report.verdict.value}"
        if report.error and report.verdict != Verdict.PASS:
            line += f" ({report.error})"
        print(line)
        if report.witnesses:
            print(f"     🔎 Testemunha: {report.witnesses[0]}")

    counts = {verdict.value: 0 for verdict in Verdict}
    for report in reports:
        counts[report.verdict.value] += 1
    print(f"\n📦 Total: {len(reports)} | ✅ {counts['pass']} | ❌ {counts['fail']} | ⚠️  {counts['ambiguous']}")
    print(f"⏱️  Tempo: {format_duration(sum(report.timing for report in reports))}")


COMMANDS = {
    "gen-hadamard": cmd_gen_hadamard,
    "build-model": cmd_build_model,
    "check-scheme": cmd_check_scheme,
    "nomura": cmd_nomura,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal."""
    args = parse_arguments(argv)
    if args.log_level:
        configure_log_level(args.log_level)

    logger.info(f"Comando: {args.command}")
    try:
        return COMMANDS[args.command](args)
    except (SpinKitError, ValueError, OSError) as e:
        logger.error(f"Erro durante execução: {e}")
        print(f"❌ Erro: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
