from .app import build_service, create_app, entry_json, sense_detail
from .auth import Principal, TokenTable
from .config import LexiconSource, ServiceConfig, load_config
from .store import (
    Comment,
    Conflict,
    EmptyPopulation,
    Forbidden,
    NotFound,
    Proposal,
    ServiceError,
    Store,
    Unauthorized,
    ValidationFailed,
)
from .ulid import UlidGenerator, new_ulid

__all__ = [
    "build_service",
    "create_app",
    "entry_json",
    "sense_detail",
    "Principal",
    "TokenTable",
    "LexiconSource",
    "ServiceConfig",
    "load_config",
    "Comment",
    "Conflict",
    "EmptyPopulation",
    "Forbidden",
    "NotFound",
    "Proposal",
    "ServiceError",
    "Store",
    "Unauthorized",
    "ValidationFailed",
    "UlidGenerator",
    "new_ulid",
]
