"""
Manifesto de Execução
=====================

Descreve uma execução de ``verify_all``: verificações, ordens k,
origem da matriz de Hadamard de cada ordem e diretório de saída.

Autor: Seu Nome
Data: 2025-09-20
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from config import get_settings
from utils.helpers import is_prime, parse_int_list

# Ordem de execução; o registro do executor usa as mesmas chaves
CHECK_IDS = (
    "hadamard",
    "type2",
    "type3",
    "gauge",
    "scheme",
    "distance_regular",
    "coherent",
    "rho",
    "fusion",
    "lemmas",
    "theorem",
    "sweep",
    "remark",
)

GENERATED_SOURCES = ("sylvester", "paley", "bundled")


def default_source(k: int) -> str:
    """Sylvester para potências de 2, Paley quando k − 1 é primo ≡ 3 mod 4."""
    if k & (k - 1) == 0:
        return "sylvester"
    if is_prime(k - 1) and (k - 1) % 4 == 3:
        return "paley"
    return "bundled"


class RunManifest(BaseModel):
    """
    Manifesto validado de uma execução completa.

    ``hadamard`` mapeia k para 'sylvester', 'paley', 'bundled' ou o
    caminho de um arquivo no formato '+/-'.
    """

    checks: List[str] = Field(default_factory=lambda: list(CHECK_IDS))
    k_values: List[int] = Field(default_factory=lambda: list(get_settings().k_values))
    hadamard: Dict[int, str] = Field(default_factory=dict)
    output_dir: str = Field(default_factory=lambda: get_settings().output_dir)

    # Parâmetros escalares (None = padrão das configurações)
    omega: Optional[int] = None
    xi: Optional[int] = None
    backend: Optional[str] = None
    tolerance: Optional[float] = None
    exhaustive_edges: bool = False
    show_progress: Optional[bool] = None

    @field_validator("checks", mode="before")
    @classmethod
    def parse_checks(cls, v):
        """Aceita lista ou texto separado por vírgula; 'all' expande."""
        if isinstance(v, str):
            v = [part.strip() for part in v.split(",") if part.strip()]
        if v in (["all"], None):
            return list(CHECK_IDS)
        return list(v)

    @field_validator("checks")
    @classmethod
    def checks_resolvable(cls, v):
        """Todo identificador precisa existir no registro."""
        unknown = [check for check in v if check not in CHECK_IDS]
        if unknown:
            raise ValueError(f"Verificações desconhecidas: {unknown}. Disponíveis: {list(CHECK_IDS)}")
        # mantém a ordem canônica
        return [check for check in CHECK_IDS if check in v]

    @field_validator("k_values", mode="before")
    @classmethod
    def parse_k_values(cls, v):
        values = parse_int_list(v)
        if not values:
            raise ValueError("Informe ao menos uma ordem k")
        if any(k < 1 for k in values):
            raise ValueError("Ordens k devem ser inteiros positivos")
        return values

    @model_validator(mode="after")
    def sources_match_orders(self):
        """Origens só para ordens presentes; arquivos precisam existir."""
        extra = sorted(set(self.hadamard) - set(self.k_values))
        if extra:
            raise ValueError(f"Origem de Hadamard para ordens fora de k_values: {extra}")
        for k, source in self.hadamard.items():
            if source not in GENERATED_SOURCES and not Path(source).exists():
                raise ValueError(f"Arquivo de Hadamard não encontrado para k={k}: {source}")
        return self

    def source_for(self, k: int) -> str:
        return self.hadamard.get(k, default_source(k))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "RunManifest":
        """Carrega um manifesto JSON."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls.model_validate(data)
