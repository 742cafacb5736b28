from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from app.models.algebra import AlgebraPresentation
from app.models.homdim import HomDim
from app.models.representation import ModuleMorphism, QuiverModule


@dataclass
class ARSequence:
    """0 -> left -> middle -> right -> 0 with left = tau(right)."""

    left: QuiverModule
    middle: QuiverModule
    right: QuiverModule
    inclusion: ModuleMorphism
    projection: ModuleMorphism


@dataclass
class IndCatalog:
    """Pairwise non-isomorphic indecomposables of a representation-finite algebra."""

    algebra: AlgebraPresentation
    modules: List[QuiverModule]
    hom_dims: np.ndarray
    tau_index: Dict[int, int]
    tau_inv_index: Dict[int, int]
    projective: List[bool]
    injective: List[bool]
    # irreducible maps into each entry: (source index, multiplicity)
    incoming: Dict[int, List[Tuple[int, int]]]
    syzygy_summands: Dict[int, List[int]]
    cosyzygy_summands: Dict[int, List[int]]
    pd_table: List[HomDim] = field(default_factory=list)
    id_table: List[HomDim] = field(default_factory=list)
    sequences: Dict[int, ARSequence] = field(default_factory=dict)
    seed: int = 0
    _lookup: Dict[Tuple, Optional[int]] = field(default_factory=dict, repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.modules)

    def index_of(self, module: QuiverModule) -> Optional[int]:
        from app.services.module_service import index_in

        key = module.key()
        if key not in self._lookup:
            self._lookup[key] = index_in(module, self.modules, seed=self.seed)
        return self._lookup[key]

    def hom_graph(self) -> nx.DiGraph:
        """Edges i -> k whenever Hom(X_i, X_k) is nonzero (self-loops dropped)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        for i in range(self.size):
            for k in range(self.size):
                if i != k and self.hom_dims[i, k]:
                    graph.add_edge(i, k)
        return graph

    def summary_rows(self) -> List[Dict]:
        rows = []
        for i, module in enumerate(self.modules):
            rows.append(
                {
                    "index": i,
                    "dims": list(module.dims),
                    "pd": str(self.pd_table[i]) if self.pd_table else "?",
                    "id": str(self.id_table[i]) if self.id_table else "?",
                    "tau": self.tau_index.get(i),
                    "tau_inv": self.tau_inv_index.get(i),
                    "projective": self.projective[i],
                    "injective": self.injective[i],
                }
            )
        return rows
