"""JSON-over-HTTP API for the review queue.

Endpoints (all JSON; see docs/api.md for payload schemas):

    GET  /api/next-sample?reviewer_id=R[&smell=S]  lease + return next sample
    POST /api/annotations                          submit one annotation
    GET  /api/stats                                queue counters
    GET  /api/export                               final labeled records
    POST /api/export                               write the export to disk

Reviewer identity is just the ``reviewer_id`` string; there is no further
authentication. State mutations are serialized inside ReviewStore.
"""

from __future__ import annotations

import time
from pathlib import Path

from fastapi import FastAPI, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .common import Label, RefactoringAction, SmellKind
from .review import Annotation, AnnotationRejected, ReviewStore
from .store import write_records


class ActionPayload(BaseModel):
    kind: str
    extract_lines: list[list[int]] | None = None
    extract_members: list[str] | None = None
    move_target: str | None = None


class AnnotationPayload(BaseModel):
    sample_id: str
    reviewer_id: str
    verdict: str
    answers: dict[str, bool]
    action: ActionPayload | None = None


def create_app(store: ReviewStore, export_path: Path | str | None = None) -> FastAPI:
    app = FastAPI(title="smellforge review service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/next-sample")
    def next_sample(reviewer_id: str = Query(...), smell: str | None = Query(None)):
        smell_filter = None
        if smell:
            try:
                smell_filter = SmellKind(smell)
            except ValueError:
                return JSONResponse(
                    status_code=422, content={"error": f"unknown smell: {smell}"}
                )
        hit = store.queue_next(reviewer_id, smell_filter)
        if hit is None:
            return {"sample": None, "checklist": None}
        record, checklist = hit
        return {"sample": record.to_dict(), "checklist": checklist.to_dict()}

    @app.post("/api/annotations")
    def submit(payload: AnnotationPayload):
        try:
            verdict = Label(payload.verdict)
        except ValueError:
            return JSONResponse(
                status_code=422,
                content={"status": "rejected", "reason": f"unknown verdict: {payload.verdict}"},
            )
        action = None
        if payload.action is not None:
            try:
                action = RefactoringAction.from_dict(payload.action.model_dump())
            except (KeyError, ValueError) as exc:
                return JSONResponse(
                    status_code=422,
                    content={"status": "rejected", "reason": f"malformed action: {exc}"},
                )
        annotation = Annotation(
            sample_id=payload.sample_id,
            reviewer_id=payload.reviewer_id,
            verdict=verdict,
            answers=payload.answers,
            action=action,
            timestamp=time.time(),
        )
        try:
            store.submit_annotation(annotation)
        except AnnotationRejected as exc:
            return JSONResponse(
                status_code=422, content={"status": "rejected", "reason": exc.reason}
            )
        return JSONResponse(status_code=201, content={"status": "accepted"})

    @app.get("/api/stats")
    def stats():
        return store.queue_stats()

    @app.get("/api/export")
    def export_records():
        return {"records": [r.to_dict() for r in store.export_final()]}

    @app.post("/api/export")
    def export_to_disk():
        records = store.export_final()
        if export_path is None:
            return JSONResponse(
                status_code=422, content={"error": "server started without an export path"}
            )
        write_records(records, export_path)
        return {"written": len(records), "path": str(export_path)}

    return app
