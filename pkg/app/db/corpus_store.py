import os
from typing import List, Optional

from app.core.config import settings
from app.core.errors import InputError


class CorpusStore:
    """Directory of `.alg` algebra files, listed in a stable (sorted) order."""

    SUFFIX = ".alg"

    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or settings.CORPUS_DIR
        if not os.path.isdir(self.directory):
            raise InputError(f"corpus directory '{self.directory}' does not exist")

    def list_files(self) -> List[str]:
        """Absolute paths of every algebra file in the directory."""
        names = sorted(n for n in os.listdir(self.directory) if n.endswith(self.SUFFIX))
        return [os.path.join(self.directory, n) for n in names]

    def get_path(self, name: str) -> Optional[str]:
        """Path of the file whose stem is `name`, if present."""
        path = os.path.join(self.directory, name + self.SUFFIX)
        return path if os.path.exists(path) else None

    @staticmethod
    def read(path: str) -> str:
        try:
            with open(path, "r") as f:
                return f.read()
        except OSError as exc:
            raise InputError(f"cannot read '{path}': {exc}") from exc
