"""HTTP/JSON API: lexicon lookup, distribution stats, and the review workflow."""

from __future__ import annotations

from fastapi import Depends, FastAPI, Header, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..ontology import SENSE_INVENTORY, LexiconEntry, load_lexicon
from .auth import Principal, TokenTable
from .config import ServiceConfig
from .store import (
    Forbidden,
    ServiceError,
    Store,
    Unauthorized,
)


def sense_detail(pos: str, code: str) -> dict | None:
    """Code plus display label (and primitive, for verbs); None for empty codes."""
    if not code:
        return None
    member = SENSE_INVENTORY[pos](code)
    detail = {"code": code, "label": member.label}
    if pos == "verb":
        detail["primitive"] = member.primitive
    return detail


def entry_json(entry: LexiconEntry) -> dict:
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
        "primary": sense_detail(entry.pos, entry.primary_sense),
        "secondary": sense_detail(entry.pos, entry.secondary_sense),
    }


class ProposalIn(BaseModel):
    lemma: str = ""
    language: str = ""
    pos: str = ""
    sense_index: int = 1
    proposed_primary: str = ""
    proposed_secondary: str = ""
    gloss: str = ""
    example: str = ""
    source: str = "crowd"
    evidence: dict | None = None


class ReviewIn(BaseModel):
    decision: str = ""


class CommentIn(BaseModel):
    text: str = ""


def create_app(store: Store, tokens: TokenTable) -> FastAPI:
    app = FastAPI(title="senselex service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def require_auth(authorization: str | None = Header(default=None)) -> Principal:
        if not authorization or not authorization.startswith("Bearer "):
            raise Unauthorized("missing bearer token")
        principal = tokens.resolve(authorization[len("Bearer "):])
        if principal is None:
            raise Unauthorized("unknown token")
        return principal

    @app.exception_handler(ServiceError)
    async def service_error(request, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content={"error": exc.code, "message": str(exc)})

    @app.get("/entries/{language}/{lemma}")
    def get_entry(language: str, lemma: str, pos: str | None = None):
        entries = store.get_entries(language, lemma, pos)
        if not entries:
            return Response(status_code=404)
        return [entry_json(e) for e in entries]

    @app.get("/entries")
    def find_entries(
        lang: str | None = None,
        pos: str | None = None,
        sense: str | None = None,
        which: str | None = None,
    ):
        return [entry_json(e) for e in store.find_entries(lang, pos, sense, which)]

    @app.get("/stats")
    def stats(lang: str, pos: str, which: str = "primary"):
        percent = store.stats(lang, pos, which)
        labels = {m.value: m.label for m in SENSE_INVENTORY[pos]}
        return {"language": lang, "pos": pos, "which": which, "percent": percent, "labels": labels}

    @app.post("/proposals", status_code=201)
    def submit_proposal(body: ProposalIn, principal: Principal = Depends(require_auth)):
        proposal = store.submit_proposal(
            lemma=body.lemma,
            language=body.language,
            pos=body.pos,
            sense_index=body.sense_index,
            proposed_primary=body.proposed_primary,
            proposed_secondary=body.proposed_secondary,
            gloss=body.gloss,
            example=body.example,
            submitter=principal.user,
            source=body.source,
            evidence=body.evidence,
        )
        return proposal.to_dict()

    @app.get("/proposals")
    def list_proposals(status: str | None = None):
        return [p.to_dict() for p in store.proposals(status)]

    @app.get("/proposals/{proposal_id}")
    def get_proposal(proposal_id: str):
        return store.proposal(proposal_id).to_dict()

    @app.post("/proposals/{proposal_id}/review")
    def review_proposal(
        proposal_id: str, body: ReviewIn, principal: Principal = Depends(require_auth)
    ):
        if principal.role != "reviewer":
            raise Forbidden("reviewer role required")
        proposal = store.review_proposal(proposal_id, body.decision, reviewer=principal.user)
        return proposal.to_dict()

    @app.post("/proposals/{proposal_id}/comments")
    def add_comment(
        proposal_id: str, body: CommentIn, principal: Principal = Depends(require_auth)
    ):
        proposal = store.add_comment(proposal_id, principal.user, body.text)
        return proposal.to_dict()

    return app


def build_service(config: ServiceConfig) -> FastAPI:
    """Open the store, ingest configured lexicons on first boot, build the app."""
    tokens = TokenTable.from_file(config.token_file)
    store = Store.open(config.data_dir, snapshot_every=config.snapshot_every)
    for source in config.lexicons:
        hosted = store.lexicon(source.language)
        if hosted is None or len(hosted) == 0:
            store.ingest_lexicon(load_lexicon(source.path, source.language))
    return create_app(store, tokens)
