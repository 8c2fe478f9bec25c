"""
Union-Find
==========

Conjuntos disjuntos sobre 0..size−1 com compressão de caminho.
A raiz de cada componente é sempre o menor elemento, o que dá
rótulos canônicos sem pós-processamento.

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import Dict, List

import numpy as np


class UnionFind:
    """
    Union-find para contar e rotular componentes conexas.

    Attributes:
        size: Número de elementos
        parents: Array de pais (raiz: parents[r] == r)
        num_components: Componentes atuais
    """

    def __init__(self, size: int):
        self.size = size
        self.parents = np.arange(size, dtype=np.int64)
        self.num_components = size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = int(self.parents[root])

        # compressão: todos os nós do caminho apontam para a raiz
        while elem != root:
            parent = int(self.parents[elem])
            self.parents[elem] = root
            elem = parent
        return root

    def union(self, a: int, b: int) -> bool:
        """
        Une as componentes de a e b.

        Returns:
            True se houve fusão
        """
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        low, high = min(root_a, root_b), max(root_a, root_b)
        self.parents[high] = low
        self.num_components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def roots(self) -> np.ndarray:
        """Raiz de todos os elementos (saltos de ponteiro vetorizados)."""
        parents = self.parents
        while True:
            jumped = parents[parents]
            if np.array_equal(jumped, parents):
                break
            parents = jumped
        self.parents = parents.copy()
        return parents

    def components(self) -> List[np.ndarray]:
        """Componentes ordenadas pela raiz (menor elemento)."""
        roots = self.roots()
        grouped: Dict[int, List[int]] = {}
        for elem, root in enumerate(roots.tolist()):
            grouped.setdefault(root, []).append(elem)
        return [np.asarray(grouped[root]) for root in sorted(grouped)]
