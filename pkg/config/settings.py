"""
Configurações do Sistema
========================

Este módulo gerencia todas as configurações do sistema usando Pydantic.
Carrega configurações de variáveis de ambiente (prefixo SPINKIT_)
e arquivos .env.

Autor: Seu Nome
Data: 2025-09-20
"""

import os
from functools import lru_cache
from typing import List, Optional, Union

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

BACKENDS = ("cyclotomic", "laurent_hybrid", "numeric")


class Settings(BaseSettings):
    """
    Configurações principais do sistema.

    Utiliza Pydantic para validação e carregamento automático
    de variáveis de ambiente (ex.: SPINKIT_PRECISION=50).
    """

    # Informações da aplicação
    app_name: str = "SpinKit"
    app_version: str = "1.0.0"
    debug: bool = False

    # Configurações de aritmética
    precision: int = 30
    tolerance: float = 1e-8
    default_backend: Optional[str] = None

    # Configurações dos modelos
    default_omega: int = 0
    default_xi: int = 1
    type3_exhaustive_max_k: int = 4
    type3_sample_size: int = 10000

    # Configurações do grafo de Nomura
    skip_connected_edges: bool = True
    lemma_sample_size: int = 1000
    random_seed: int = 20240607

    # Configurações de verificação
    k_values: Union[List[int], str] = [1, 2, 4, 8]
    output_dir: str = "reports"
    show_progress: bool = True

    # Configurações de Hadamard
    max_sylvester_order: int = 256

    # Configurações de logging
    log_level: str = "INFO"
    log_dir: str = "logs"

    @field_validator("k_values", mode="before")
    @classmethod
    def parse_k_values(cls, v):
        """Parse lista de ordens de string separada por vírgula."""
        if isinstance(v, int):
            v = [v]
        elif isinstance(v, str):
            v = [part for part in v.split(",") if part.strip()]
        values = [int(item) for item in v]
        if any(k < 1 for k in values):
            raise ValueError("Ordens k devem ser inteiros positivos")
        return values

    @field_validator("precision")
    @classmethod
    def validate_precision(cls, v):
        """Valida número de dígitos de precisão."""
        if v < 15:
            raise ValueError("Precisão deve ter pelo menos 15 dígitos")
        return v

    @field_validator("tolerance")
    @classmethod
    def validate_tolerance(cls, v):
        """Valida tolerância numérica."""
        if v < 0:
            raise ValueError("Tolerância deve ser não negativa")
        return v

    @field_validator("default_backend")
    @classmethod
    def validate_backend(cls, v):
        """Valida nome do backend."""
        if v in (None, ""):
            return None
        if v not in BACKENDS:
            raise ValueError(f"Backend deve ser um de: {list(BACKENDS)}")
        return v

    @field_validator("default_omega")
    @classmethod
    def validate_omega(cls, v):
        """ω = i^o com o em 0..3."""
        if v not in (0, 1, 2, 3):
            raise ValueError("Expoente de ω deve estar em 0..3")
        return v

    @field_validator("default_xi")
    @classmethod
    def validate_xi(cls, v):
        """ξ = ζ₈^e com e ímpar."""
        if v not in (1, 3, 5, 7):
            raise ValueError("Expoente de ξ deve ser 1, 3, 5 ou 7")
        return v

    @field_validator("log_dir")
    @classmethod
    def create_log_dir(cls, v):
        """Cria diretório de logs se não existir."""
        os.makedirs(v, exist_ok=True)
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        """Valida nível de log."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Nível de log deve ser um de: {valid_levels}")
        return v.upper()

    model_config = SettingsConfigDict(
        env_prefix="SPINKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def sampling_config(self) -> dict:
        """Retorna parâmetros de amostragem das varreduras grandes."""
        return {
            "type3_exhaustive_max_k": self.type3_exhaustive_max_k,
            "type3_sample_size": self.type3_sample_size,
            "lemma_sample_size": self.lemma_sample_size,
            "seed": self.random_seed,
        }


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Retorna a instância (em cache) das configurações.

    Returns:
        Settings carregadas do ambiente
    """
    return Settings()
