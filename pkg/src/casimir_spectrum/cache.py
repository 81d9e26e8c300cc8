"""On-disk store for irreducible characters.

One JSON file per (Cartan type, highest weight), written atomically so that
concurrent runs sharing a cache directory can only race on identical content.
Unreadable or mismatched files are treated as misses and silently recomputed.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .characters import entries_from_payload, entries_to_payload
from .root_system import Weight


class CharacterStore:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path_for(self, cartan_type, lam: Weight) -> Path:
        name = str(cartan_type) + "_" + "_".join(str(c) for c in lam) + ".json"
        return self.root / name

    def load(self, cartan_type, lam: Weight) -> dict[Weight, int] | None:
        path = self.path_for(cartan_type, lam)
        try:
            payload = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        return entries_from_payload(payload, cartan_type, lam)

    def save(self, cartan_type, lam: Weight, entries: dict[Weight, int]) -> None:
        payload = entries_to_payload(cartan_type, lam, entries)
        text = json.dumps(payload, separators=(",", ":")) + "\n"
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp, self.path_for(cartan_type, lam))
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
