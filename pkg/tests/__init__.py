"""
Módulo de Testes
================

Este módulo contém todos os testes unitários e de integração
do verificador de modelos de spin.

Testes disponíveis:
- test_arithmetic.py: Testes para os backends de aritmética
- test_linalg.py: Testes para índices e matrizes de spin
- test_hadamard.py: Testes para construções e formato de Hadamard
- test_models.py: Testes para W, W′, W̃, W̃′ e Potts
- test_schemes.py: Testes para esquemas e configuração coerente
- test_nomura.py: Testes para o grafo e a álgebra de Nomura
- test_verify.py: Testes para teorema, observação, executor e CLI
- test_utils.py: Testes para helpers, relatórios e configurações
"""

__version__ = "1.0.0"
__author__ = "Seu Nome"
