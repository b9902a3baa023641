"""Service configuration: JSON config file with environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_PREFIX = "SENSELEX_"


@dataclass
class LexiconSource:
    language: str
    path: str


@dataclass
class ServiceConfig:
    listen: str = "127.0.0.1:8000"
    token_file: str = "tokens.json"
    data_dir: str = "data"
    lexicons: list[LexiconSource] = field(default_factory=list)
    snapshot_every: int = 100

    @property
    def host(self) -> str:
        return self.listen.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen.rsplit(":", 1)[1])


def load_config(path: str | Path | None = None) -> ServiceConfig:
    """Read the JSON config file, then apply SENSELEX_* environment overrides."""
    config = ServiceConfig()
    if path is not None:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        config.listen = raw.get("listen", config.listen)
        config.token_file = raw.get("token_file", config.token_file)
        config.data_dir = raw.get("data_dir", config.data_dir)
        config.snapshot_every = int(raw.get("snapshot_every", config.snapshot_every))
        config.lexicons = [
            LexiconSource(language=item["language"], path=item["path"])
            for item in raw.get("lexicons", [])
        ]
    if ENV_PREFIX + "LISTEN" in os.environ:
        config.listen = os.environ[ENV_PREFIX + "LISTEN"]
    if ENV_PREFIX + "TOKEN_FILE" in os.environ:
        config.token_file = os.environ[ENV_PREFIX + "TOKEN_FILE"]
    if ENV_PREFIX + "DATA_DIR" in os.environ:
        config.data_dir = os.environ[ENV_PREFIX + "DATA_DIR"]
    return config
