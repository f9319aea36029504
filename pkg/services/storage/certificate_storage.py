"""
Certificate File Storage
========================

Persists certificate JSON to local files.

Features:
- Atomic writes (temp file + fsync + rename)
- Directory creation if needed
- Graceful handling of missing/corrupt files on load

Related Files:
- theta/exporters/certificate_json.py: canonical text of a certificate
- theta/cli/commands.py: `--out` and `explain`
"""

from __future__ import annotations
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class CertificateStorage:
    """One certificate file on disk."""

    def __init__(self, file_path: Path):
        self.file_path = Path(file_path)

    def exists(self) -> bool:
        return self.file_path.exists()

    def load(self) -> Optional[Dict[str, Any]]:
        """
        Parsed JSON document, or None when the file is missing or not valid JSON.

        Never raises for unreadable files.
        """
        if not self.file_path.exists():
            return None
        try:
            with self.file_path.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            logger.warning("cannot read certificate %s: %s", self.file_path, exc)
            return None
        return data if isinstance(data, dict) else None

    def load_text(self) -> Optional[str]:
        if not self.file_path.exists():
            return None
        try:
            return self.file_path.read_text(encoding="utf-8")
        except OSError as exc:
            logger.warning("cannot read certificate %s: %s", self.file_path, exc)
            return None

    def save(self, text: str) -> Path:
        """
        Write already-serialized certificate text atomically.

        Raises:
            IOError: if the file is missing after the rename
        """
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        tmp_path = self.file_path.with_suffix(self.file_path.suffix + ".tmp")

        with tmp_path.open("w", encoding="utf-8") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())

        os.replace(tmp_path, self.file_path)

        if not self.file_path.exists():
            raise IOError(f"Failed to write certificate to {self.file_path}")
        logger.info("certificate written to %s", self.file_path)
        return self.file_path
