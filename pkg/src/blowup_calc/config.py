"""Process configuration: ``blowup.toml`` in the working directory, then env."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ValidationError

CONFIG_FILE = "blowup.toml"
ENV_EPSILON = "BLOWUP_EPSILON"
OUTPUT_FORMATS = ("json", "csv", "pretty")


@dataclass(frozen=True)
class Config:
    epsilon: int = 1
    output: str = "json"
    paper_literal_mode: bool = False

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValidationError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.output not in OUTPUT_FORMATS:
            raise ValidationError(f"output must be one of {OUTPUT_FORMATS}, got {self.output!r}")


def load_config(directory: Optional[Path] = None, environ=None) -> Config:
    directory = Path.cwd() if directory is None else Path(directory)
    environ = os.environ if environ is None else environ
    values: dict = {}
    path = directory / CONFIG_FILE
    if path.is_file():
        with path.open("rb") as fh:
            try:
                raw = tomllib.load(fh)
            except tomllib.TOMLDecodeError as exc:
                raise ValidationError(f"{path}: {exc}") from exc
        unknown = set(raw) - {"epsilon", "output", "paper_literal_mode"}
        if unknown:
            raise ValidationError(f"{path}: unknown keys {sorted(unknown)}")
        values.update(raw)
    if environ.get(ENV_EPSILON):
        try:
            values["epsilon"] = int(environ[ENV_EPSILON])
        except ValueError as exc:
            raise ValidationError(f"{ENV_EPSILON}={environ[ENV_EPSILON]!r} is not an integer") from exc
    return Config(**values)
