"""Event-sourced lexicon and proposal store with single-writer discipline.

Every mutation appends one or more events to a JSON-lines log; replaying
the log from empty reproduces the store state exactly (byte-identical
canonical snapshot). Reads are served from immutable lexicon values that
are swapped atomically under the writer lock.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable

from ..ontology import (
    LANGUAGES,
    Lexicon,
    LexiconEntry,
    EmptyPopulationError,
)
from .ulid import new_ulid

SOURCES = ("crowd", "propagation")
#: Lexicon provenance recorded when a proposal from each source is accepted.
SOURCE_PROVENANCE = {"crowd": "crowd", "propagation": "propagated"}

EVENT_ENTRY_ADDED = "entry-added"
EVENT_PROPOSAL_SUBMITTED = "proposal-submitted"
EVENT_PROPOSAL_REVIEWED = "proposal-reviewed"
EVENT_COMMENT_ADDED = "comment-added"


class ServiceError(Exception):
    status = 400
    code = "bad_request"


class ValidationFailed(ServiceError):
    status = 400
    code = "invalid"


class Unauthorized(ServiceError):
    status = 401
    code = "unauthorized"


class Forbidden(ServiceError):
    status = 403
    code = "forbidden"


class NotFound(ServiceError):
    status = 404
    code = "not_found"


class Conflict(ServiceError):
    status = 409
    code = "conflict"


class EmptyPopulation(ServiceError):
    status = 422
    code = "empty_population"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


@dataclass
class Comment:
    user: str
    timestamp: str
    text: str

    def to_dict(self) -> dict:
        return {"user": self.user, "timestamp": self.timestamp, "text": self.text}


@dataclass
class Proposal:
    """A crowdsourced or propagation-sourced annotation suggestion."""

    id: str
    lemma: str
    language: str
    pos: str
    sense_index: int
    proposed_primary: str
    proposed_secondary: str
    gloss: str
    example: str
    submitter: str
    source: str
    created_at: str
    status: str = "pending"
    reviewer: str = ""
    reviewed_at: str | None = None
    evidence: dict | None = None
    comments: list[Comment] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "lemma": self.lemma,
            "language": self.language,
            "pos": self.pos,
            "sense_index": self.sense_index,
            "proposed_primary": self.proposed_primary,
            "proposed_secondary": self.proposed_secondary,
            "gloss": self.gloss,
            "example": self.example,
            "submitter": self.submitter,
            "source": self.source,
            "created_at": self.created_at,
            "status": self.status,
            "reviewer": self.reviewer,
            "reviewed_at": self.reviewed_at,
            "evidence": self.evidence,
            "comments": [c.to_dict() for c in self.comments],
        }


def _entry_to_dict(entry: LexiconEntry) -> dict:
    return {
        "lemma": entry.lemma,
        "language": entry.language,
        "pos": entry.pos,
        "sense_index": entry.sense_index,
        "gloss": entry.gloss,
        "primary_sense": entry.primary_sense,
        "secondary_sense": entry.secondary_sense,
        "provenance": entry.provenance,
        "example": entry.example,
    }


def _entry_from_dict(payload: dict) -> LexiconEntry:
    return LexiconEntry(
        lemma=payload["lemma"],
        language=payload["language"],
        pos=payload["pos"],
        sense_index=payload["sense_index"],
        primary_sense=payload["primary_sense"],
        secondary_sense=payload["secondary_sense"],
        gloss=payload["gloss"],
        provenance=payload["provenance"],
        example=payload["example"],
    )


class Store:
    """Lexicons plus the proposal queue, persisted as an append-only event log."""

    def __init__(self, data_dir: str | Path | None = None, snapshot_every: int = 100):
        self._lock = threading.Lock()
        self._lexicons: dict[str, Lexicon] = {}
        self._proposals: dict[str, Proposal] = {}
        self._events_since_snapshot = 0
        self._snapshot_every = snapshot_every
        self._data_dir = Path(data_dir) if data_dir is not None else None
        self._log_handle = None
        if self._data_dir is not None:
            self._data_dir.mkdir(parents=True, exist_ok=True)

    # -- persistence ------------------------------------------------------

    @property
    def events_path(self) -> Path | None:
        return self._data_dir / "events.jsonl" if self._data_dir else None

    @property
    def snapshot_path(self) -> Path | None:
        return self._data_dir / "snapshot.json" if self._data_dir else None

    @classmethod
    def open(cls, data_dir: str | Path, snapshot_every: int = 100) -> "Store":
        """Open a store, replaying any existing event log."""
        store = cls(data_dir, snapshot_every=snapshot_every)
        path = store.events_path
        if path is not None and path.exists():
            with path.open(encoding="utf-8") as handle:
                store.replay(json.loads(line) for line in handle if line.strip())
        return store

    def replay(self, events: Iterable[dict]) -> None:
        """Apply recorded events without re-persisting them."""
        with self._lock:
            for event in events:
                self._apply(event)

    def _record(self, event: dict) -> None:
        """Apply and persist one fresh event. Caller must hold the lock."""
        self._apply(event)
        if self._data_dir is None:
            return
        if self._log_handle is None:
            self._log_handle = self.events_path.open("a", encoding="utf-8")
        self._log_handle.write(json.dumps(event, ensure_ascii=False, sort_keys=True) + "\n")
        self._log_handle.flush()
        self._events_since_snapshot += 1
        if self._events_since_snapshot >= self._snapshot_every:
            self._write_snapshot_locked()

    def _apply(self, event: dict) -> None:
        kind = event["type"]
        if kind == EVENT_ENTRY_ADDED:
            entry = _entry_from_dict(event["entry"])
            lexicon = self._lexicons.get(entry.language) or Lexicon([], entry.language)
            updated = lexicon.with_entry(entry)
            self._lexicons = {**self._lexicons, entry.language: updated}
        elif kind == EVENT_PROPOSAL_SUBMITTED:
            payload = event["proposal"]
            proposal = Proposal(
                id=payload["id"],
                lemma=payload["lemma"],
                language=payload["language"],
                pos=payload["pos"],
                sense_index=payload["sense_index"],
                proposed_primary=payload["proposed_primary"],
                proposed_secondary=payload["proposed_secondary"],
                gloss=payload["gloss"],
                example=payload["example"],
                submitter=payload["submitter"],
                source=payload["source"],
                created_at=payload["created_at"],
                evidence=payload.get("evidence"),
            )
            self._proposals[proposal.id] = proposal
        elif kind == EVENT_PROPOSAL_REVIEWED:
            proposal = self._proposals[event["id"]]
            proposal.status = "accepted" if event["decision"] == "accept" else "rejected"
            proposal.reviewer = event["reviewer"]
            proposal.reviewed_at = event["timestamp"]
        elif kind == EVENT_COMMENT_ADDED:
            proposal = self._proposals[event["id"]]
            proposal.comments.append(
                Comment(user=event["user"], timestamp=event["timestamp"], text=event["text"])
            )
        else:
            raise ValueError(f"unknown event type {kind!r}")

    def snapshot_bytes(self) -> bytes:
        """Canonical JSON serialization of the whole store state."""
        with self._lock:
            state = {
                "lexicons": {
                    language: [_entry_to_dict(e) for e in lexicon.entries]
                    for language, lexicon in sorted(self._lexicons.items())
                },
                "proposals": [
                    self._proposals[pid].to_dict() for pid in sorted(self._proposals)
                ],
            }
        return json.dumps(state, ensure_ascii=False, sort_keys=True, separators=(",", ":")).encode(
            "utf-8"
        )

    def _write_snapshot_locked(self) -> None:
        self._events_since_snapshot = 0
        if self.snapshot_path is None:
            return
        state = {
            "lexicons": {
                language: [_entry_to_dict(e) for e in lexicon.entries]
                for language, lexicon in sorted(self._lexicons.items())
            },
            "proposals": [self._proposals[pid].to_dict() for pid in sorted(self._proposals)],
        }
        self.snapshot_path.write_text(
            json.dumps(state, ensure_ascii=False, sort_keys=True, separators=(",", ":")),
            encoding="utf-8",
        )

    def write_snapshot(self) -> None:
        with self._lock:
            self._write_snapshot_locked()

    def close(self) -> None:
        with self._lock:
            self._write_snapshot_locked()
            if self._log_handle is not None:
                self._log_handle.close()
                self._log_handle = None

    # -- commands ---------------------------------------------------------

    def ingest_lexicon(self, lexicon: Lexicon) -> int:
        """Record every entry of `lexicon` as an entry-added event."""
        with self._lock:
            for entry in lexicon.entries:
                self._record({"type": EVENT_ENTRY_ADDED, "entry": _entry_to_dict(entry)})
            return len(lexicon)

    def submit_proposal(
        self,
        *,
        lemma: str,
        language: str,
        pos: str,
        sense_index: int,
        proposed_primary: str,
        proposed_secondary: str = "",
        gloss: str = "",
        example: str,
        submitter: str,
        source: str = "crowd",
        evidence: dict | None = None,
    ) -> Proposal:
        if source not in SOURCES:
            raise ValidationFailed(f"source must be one of {SOURCES}, got {source!r}")
        if not example or not example.strip():
            raise ValidationFailed("a supporting example sentence is required")
        try:
            probe = LexiconEntry(
                lemma=lemma,
                language=language,
                pos=pos,
                sense_index=sense_index,
                primary_sense=proposed_primary,
                secondary_sense=proposed_secondary,
                gloss=gloss,
                provenance=SOURCE_PROVENANCE[source],
                example=example,
            )
        except ValueError as exc:
            raise ValidationFailed(str(exc)) from None
        proposal = Proposal(
            id=new_ulid(),
            lemma=probe.lemma,
            language=language,
            pos=pos,
            sense_index=sense_index,
            proposed_primary=proposed_primary,
            proposed_secondary=proposed_secondary,
            gloss=gloss,
            example=example,
            submitter=submitter,
            source=source,
            created_at=_now(),
            evidence=evidence,
        )
        event = {"type": EVENT_PROPOSAL_SUBMITTED, "proposal": proposal.to_dict()}
        del event["proposal"]["comments"]
        del event["proposal"]["status"]
        del event["proposal"]["reviewer"]
        del event["proposal"]["reviewed_at"]
        with self._lock:
            self._record(event)
            return self._proposals[proposal.id]

    def review_proposal(self, proposal_id: str, decision: str, reviewer: str) -> Proposal:
        """Accept or reject a pending proposal; accepting mutates the lexicon."""
        if decision not in ("accept", "reject"):
            raise ValidationFailed(f"decision must be 'accept' or 'reject', got {decision!r}")
        with self._lock:
            proposal = self._proposals.get(proposal_id)
            if proposal is None:
                raise NotFound(f"no proposal {proposal_id!r}")
            if proposal.status != "pending":
                raise Conflict(f"proposal {proposal_id!r} was already {proposal.status}")
            if reviewer == proposal.submitter:
                raise Forbidden("a proposal cannot be reviewed by its submitter")
            if decision == "accept":
                entry = LexiconEntry(
                    lemma=proposal.lemma,
                    language=proposal.language,
                    pos=proposal.pos,
                    sense_index=proposal.sense_index,
                    primary_sense=proposal.proposed_primary,
                    secondary_sense=proposal.proposed_secondary,
                    gloss=proposal.gloss,
                    provenance=SOURCE_PROVENANCE[proposal.source],
                    example=proposal.example,
                )
                lexicon = self._lexicons.get(entry.language) or Lexicon([], entry.language)
                try:
                    lexicon.with_entry(entry)  # probe before recording anything
                except ValueError as exc:
                    raise Conflict(f"accepting would violate lexicon invariants: {exc}") from None
                self._record({"type": EVENT_ENTRY_ADDED, "entry": _entry_to_dict(entry)})
            self._record(
                {
                    "type": EVENT_PROPOSAL_REVIEWED,
                    "id": proposal_id,
                    "decision": decision,
                    "reviewer": reviewer,
                    "timestamp": _now(),
                }
            )
            return proposal

    def add_comment(self, proposal_id: str, user: str, text: str) -> Proposal:
        if not text or not text.strip():
            raise ValidationFailed("comment text must be non-empty")
        with self._lock:
            if proposal_id not in self._proposals:
                raise NotFound(f"no proposal {proposal_id!r}")
            self._record(
                {
                    "type": EVENT_COMMENT_ADDED,
                    "id": proposal_id,
                    "user": user,
                    "timestamp": _now(),
                    "text": text,
                }
            )
            return self._proposals[proposal_id]

    # -- queries ----------------------------------------------------------

    def languages(self) -> list[str]:
        with self._lock:
            return sorted(self._lexicons)

    def lexicon(self, language: str) -> Lexicon | None:
        with self._lock:
            return self._lexicons.get(language)

    def get_entries(self, language: str, lemma: str, pos: str | None = None) -> list[LexiconEntry]:
        if language not in LANGUAGES:
            raise ValidationFailed(f"unknown language code {language!r}")
        lexicon = self.lexicon(language)
        if lexicon is None:
            return []
        try:
            return lexicon.lookup(lemma, pos)
        except ValueError as exc:
            raise ValidationFailed(str(exc)) from None

    def find_entries(
        self,
        language: str | None = None,
        pos: str | None = None,
        sense: str | None = None,
        which: str | None = None,
    ) -> list[LexiconEntry]:
        """Filter all hosted entries by language, pos, and sense code."""
        if which is not None and which not in ("primary", "secondary"):
            raise ValidationFailed("which must be 'primary' or 'secondary'")
        with self._lock:
            lexicons = dict(self._lexicons)
        results = []
        for lang in sorted(lexicons):
            if language is not None and lang != language:
                continue
            for entry in lexicons[lang].entries:
                if pos is not None and entry.pos != pos:
                    continue
                if sense is not None:
                    if which == "primary":
                        matched = entry.primary_sense == sense
                    elif which == "secondary":
                        matched = entry.secondary_sense == sense
                    else:
                        matched = sense in (entry.primary_sense, entry.secondary_sense)
                    if not matched:
                        continue
                results.append(entry)
        return results

    def stats(self, language: str, pos: str, which: str) -> dict[str, float]:
        if language not in LANGUAGES:
            raise ValidationFailed(f"unknown language code {language!r}")
        lexicon = self.lexicon(language)
        if lexicon is None:
            raise EmptyPopulation(f"no lexicon hosted for language {language!r}")
        try:
            return lexicon.sense_distribution(pos, which)
        except EmptyPopulationError as exc:
            raise EmptyPopulation(str(exc)) from None
        except ValueError as exc:
            raise ValidationFailed(str(exc)) from None

    def proposals(self, status: str | None = None) -> list[Proposal]:
        if status is not None and status not in ("pending", "accepted", "rejected"):
            raise ValidationFailed(f"unknown proposal status {status!r}")
        with self._lock:
            items = [self._proposals[pid] for pid in sorted(self._proposals)]
        if status is not None:
            items = [p for p in items if p.status == status]
        return items

    def proposal(self, proposal_id: str) -> Proposal:
        with self._lock:
            proposal = self._proposals.get(proposal_id)
        if proposal is None:
            raise NotFound(f"no proposal {proposal_id!r}")
        return proposal
