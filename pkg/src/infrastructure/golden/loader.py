"""Loading of golden data files shipped with the package."""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError, model_validator

from ...core.config import settings
from ...core.domain.matrices import IntMatrix
from ...core.exceptions import GoldenMismatchError
from ...core.logging import get_logger

logger = get_logger("golden")

APPENDIX_FILE = "appendix_M_plus_I.json"


class GoldenMatrix(BaseModel):
    """A square integer matrix stored with the constant added to every entry."""

    description: str = ""
    offset: int = 0
    size: int
    matrix: List[List[int]]

    @model_validator(mode="after")
    def check_shape(self) -> "GoldenMatrix":
        if len(self.matrix) != self.size or any(len(row) != self.size for row in self.matrix):
            raise ValueError(f"Golden matrix is not {self.size}x{self.size}")
        return self

    def restored(self) -> IntMatrix:
        """The matrix with the stored offset subtracted from every entry."""
        return IntMatrix.from_rows(
            [[value - self.offset for value in row] for row in self.matrix], self.size
        )


def golden_path(name: str, directory: Optional[Path] = None) -> Path:
    return Path(directory or settings.golden_dir) / name


def load_golden_matrix(name: str, directory: Optional[Path] = None) -> GoldenMatrix:
    path = golden_path(name, directory)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.error("golden_file_unreadable", path=str(path), error=str(e))
        raise GoldenMismatchError(f"Cannot read golden file {path}: {e}", "GOLDEN_UNREADABLE")
    try:
        golden = GoldenMatrix.model_validate(data)
    except ValidationError as e:
        raise GoldenMismatchError(f"Golden file {path} is malformed: {e}", "GOLDEN_MALFORMED")
    logger.debug("golden_file_loaded", path=str(path), size=golden.size)
    return golden


def load_appendix_matrix(directory: Optional[Path] = None) -> GoldenMatrix:
    """The transcribed M + I matrix of the 19 Fermat basis planes."""
    return load_golden_matrix(APPENDIX_FILE, directory)
