import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

_PACKAGE_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class Settings:
    # Ground field
    DEFAULT_PRIME = 101

    # Build / resolution caps
    NILPOTENCY_CAP = 30
    RESOLUTION_CAP = 24
    DOMDIM_CAP = 8
    CATALOG_CAP = 256

    # Randomised search
    SEED = 1729
    RETRY_BUDGET = 64
    ISO_EXHAUSTIVE_LIMIT = 4096

    # Theorem suite
    JMS_SEARCH_LIMIT = 25
    SES_SAMPLES = 100
    RANDOM_MATRIX_SAMPLES = 1000

    # Corpus directory: the only setting read from the environment
    CORPUS_DIR = os.getenv("CORPUS_DIR", os.path.join(_PACKAGE_ROOT, "corpus"))


settings = Settings()


@dataclass(frozen=True)
class RunCaps:
    """Caps and seed resolved for one run: CLI flag > file `caps:` line > Settings."""

    nilpotency: int = Settings.NILPOTENCY_CAP
    resolution: int = Settings.RESOLUTION_CAP
    catalog: int = Settings.CATALOG_CAP
    seed: int = Settings.SEED

    def merged(
        self,
        nilpotency: Optional[int] = None,
        resolution: Optional[int] = None,
        catalog: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> "RunCaps":
        """Return a copy with every non-None override applied."""
        return RunCaps(
            nilpotency=self.nilpotency if nilpotency is None else nilpotency,
            resolution=self.resolution if resolution is None else resolution,
            catalog=self.catalog if catalog is None else catalog,
            seed=self.seed if seed is None else seed,
        )
