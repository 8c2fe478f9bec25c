"""
Exceções do Sistema
===================

Hierarquia de exceções usada por todos os módulos do spinkit.
Cada exceção carrega um dicionário de contexto que é repassado
ao logging estruturado (ver ``utils.logger.log_error_with_context``).

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import Any, Dict, Optional, Tuple


class SpinKitError(Exception):
    """
    Exceção base do sistema.

    Args:
        message: Mensagem legível
        **context: Dados adicionais (testemunhas, parâmetros)
    """

    def __init__(self, message: str = "", **context: Any):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = context

    def __str__(self) -> str:
        if not self.context:
            return self.message
        details = ", ".join(f"{key}={value}" for key, value in self.context.items())
        return f"{self.message} ({details})"


# Aritmética
class ConstraintViolation(SpinKitError):
    """A restrição (u² + u⁻²)² = k ou as condições sobre ω/ξ falharam."""


class IncompatibleMode(SpinKitError):
    """O backend escolhido não representa o modo de u pedido."""


class DivisionByZero(SpinKitError):
    """Inversão de um escalar nulo."""


class NonInvertible(SpinKitError):
    """Inversão de um escalar que não é monômio nem ciclotômico não nulo."""


class AmbiguousZero(SpinKitError):
    """Um teste de zero retornou AMBIGUOUS."""


# Álgebra linear
class ShapeMismatch(SpinKitError):
    """Dimensões incompatíveis."""


# Hadamard
class SizeLimit(SpinKitError):
    """Ordem pedida acima do limite configurado."""


class BadPrime(SpinKitError):
    """q não é primo ou q ≢ 3 (mod 4)."""


class ParseError(SpinKitError):
    """
    Erro de leitura de arquivo '+/-'.

    Args:
        message: Descrição do problema
        line: Linha (1-indexada)
        column: Coluna (1-indexada)
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column


# Modelos
class OrderMismatch(SpinKitError):
    """Ordem da matriz de Hadamard diferente de ctx.k."""


class IdentityFailed(SpinKitError):
    """Identidade entre matrizes falhou; o contexto traz a primeira entrada divergente."""


# Esquemas
class DefinitionMismatch(SpinKitError):
    """As duas apresentações das relações divergem."""


class NotClosed(SpinKitError):
    """Um produto A_i A_j sai do espaço gerado pelas relações."""


class RuleViolation(SpinKitError):
    """A regra de produto da configuração coerente falhou."""


class NotAutomorphism(SpinKitError):
    """A permutação ρ não preserva as constantes de estrutura."""


class FusionMismatch(SpinKitError):
    """A fusão das órbitas de ρ não reproduz a família esperada."""


# Nomura
class NonInvertibleEntry(SpinKitError):
    """Entrada da matriz não é um monômio invertível."""


class AmbiguousEdge(SpinKitError):
    """
    Teste de zero ambíguo em uma aresta do grafo de Nomura.

    Args:
        pair: Par de vértices (índices linearizados)
    """

    def __init__(self, message: str, pair: Tuple[int, int], **context: Any):
        super().__init__(message, pair=pair, **context)
        self.pair = pair


class LemmaFailed(SpinKitError):
    """
    Falha em uma das verificações de lema.

    Args:
        lemma: Identificador do lema
        witness: Tupla testemunha
    """

    def __init__(self, message: str, lemma: str, witness: Optional[Any] = None):
        super().__init__(message, lemma=lemma, witness=witness)
        self.lemma = lemma
        self.witness = witness


# Verificação
class VerificationFailed(SpinKitError):
    """Uma cláusula de verificação falhou."""


class PreconditionFailed(SpinKitError):
    """Hipótese da verificação não satisfeita (ex.: k < 4 no teorema)."""


ERRORS_BY_NAME = {
    cls.__name__: cls
    for cls in (
        ConstraintViolation,
        IncompatibleMode,
        DivisionByZero,
        NonInvertible,
        AmbiguousZero,
        ShapeMismatch,
        SizeLimit,
        BadPrime,
        OrderMismatch,
        IdentityFailed,
        DefinitionMismatch,
        NotClosed,
        RuleViolation,
        NotAutomorphism,
        FusionMismatch,
        NonInvertibleEntry,
        VerificationFailed,
        PreconditionFailed,
    )
}
