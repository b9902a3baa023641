"""Static bearer-token authentication with contributor/reviewer roles."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

ROLES = ("contributor", "reviewer")


@dataclass(frozen=True)
class Principal:
    user: str
    role: str


class TokenTable:
    """In-memory token -> principal map loaded from a JSON token file."""

    def __init__(self, tokens: dict[str, Principal]):
        self._tokens = dict(tokens)

    @classmethod
    def from_file(cls, path: str | Path) -> "TokenTable":
        """Token file: JSON list of {"token", "user", "role"} objects."""
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        tokens = {}
        for item in raw:
            role = item["role"]
            if role not in ROLES:
                raise ValueError(f"unknown role {role!r} for user {item['user']!r}")
            if item["token"] in tokens:
                raise ValueError("duplicate token in token file")
            tokens[item["token"]] = Principal(user=item["user"], role=role)
        return cls(tokens)

    def resolve(self, token: str) -> Principal | None:
        return self._tokens.get(token)
