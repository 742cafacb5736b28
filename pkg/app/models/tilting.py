from dataclasses import dataclass, field
from typing import List

from app.models.representation import ModuleMorphism, QuiverModule


@dataclass
class TiltingReport:
    module: QuiverModule
    is_partial_tilting: bool
    is_tilting: bool
    is_partial_cotilting: bool
    is_cotilting: bool
    summand_count: int
    # universal add-T approximations of each P_v (tilting) and onto each I_v (cotilting)
    witness_sequences: List[ModuleMorphism] = field(default_factory=list)
    cowitness_sequences: List[ModuleMorphism] = field(default_factory=list)


@dataclass
class TorsionPairData:
    """A torsion pair restricted to the catalog, as sorted index lists."""

    tilter: QuiverModule
    torsion_indices: List[int]
    torsionfree_indices: List[int]
    splitting: bool
    catalog_size: int = 0

    @property
    def neither(self) -> List[int]:
        both = set(self.torsion_indices) | set(self.torsionfree_indices)
        return [i for i in range(self.catalog_size) if i not in both]
