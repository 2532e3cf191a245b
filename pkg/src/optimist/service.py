"""HTTP interface exposing one agent session to the counterexample UI.

A thin adapter over ``Optimist``: every behavior here is reachable through
the agent API without the service running.  Reads are lock-free snapshots;
mutations (graph uploads, theorem marking, saves) are serialized through one
lock, honoring the agent's single-writer contract.  Responses never contain
wall-clock data, so they are deterministic functions of session state.
"""

from __future__ import annotations

import threading
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .agent import Optimist
from .conjectures import Conjecture, conjecture_id, conjecture_to_json, holds_on, render
from .graphs import GraphError, graph_from_json_dict, parse_graph6
from .invariants import CeilingExceededError

__all__ = ["create_app"]


class GraphUpload(BaseModel):
    graph6: Optional[str] = None
    n: Optional[int] = None
    edges: Optional[list[list[int]]] = None


class TheoremRequest(BaseModel):
    conjecture_id: str


class SaveRequest(BaseModel):
    path: str


def _conjecture_payload(conjecture: Conjecture, direction: str) -> dict:
    payload = conjecture_to_json(conjecture)
    payload["id"] = conjecture_id(conjecture)
    payload["text"] = render(conjecture)
    payload["direction"] = direction
    return payload


def create_app(agent: Optional[Optimist], session_path: Optional[str] = None) -> FastAPI:
    """Build the FastAPI app around one live agent (None serves 503s)."""
    app = FastAPI(title="optimist session service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    lock = threading.Lock()
    app.state.agent = agent
    app.state.session_path = session_path

    def require_agent() -> Optimist:
        if app.state.agent is None:
            raise HTTPException(status_code=503, detail="no session loaded")
        return app.state.agent

    @app.get("/state")
    def get_state() -> dict:
        live = require_agent()
        return {
            "graphs": len(live.table.rows),
            "graph_names": live.table.graph_names(),
            "numeric_columns": list(live.table.numeric_columns),
            "boolean_columns": list(live.table.boolean_columns),
            "targets": {
                target: {
                    "upper": len(live.upper_pools.get(target, [])),
                    "lower": len(live.lower_pools.get(target, [])),
                }
                for target in sorted(set(live.upper_pools) | set(live.lower_pools))
            },
            "known_theorems": len(live.known_theorems),
            "config": {
                "smokey_mode": live.config.smokey_mode,
                "min_touch": live.config.min_touch,
                "ceiling": live.config.ceiling,
            },
        }

    @app.get("/conjectures/{target}")
    def get_conjectures(target: str) -> dict:
        live = require_agent()
        if target not in live.table.numeric_columns:
            raise HTTPException(status_code=404, detail=f"unknown target {target!r}")
        with lock:
            if target not in live.upper_pools or target not in live.lower_pools:
                live.conjecture(target)
            return {
                "target": target,
                "upper": [
                    _conjecture_payload(c, "upper") for c in live.upper_pools[target]
                ],
                "lower": [
                    _conjecture_payload(c, "lower") for c in live.lower_pools[target]
                ],
            }

    @app.post("/graphs")
    def post_graph(upload: GraphUpload) -> dict:
        live = require_agent()
        try:
            if upload.graph6 is not None:
                graph = parse_graph6(upload.graph6)
            elif upload.n is not None and upload.edges is not None:
                graph = graph_from_json_dict({"n": upload.n, "edges": upload.edges})
            else:
                raise GraphError("upload needs either 'graph6' or 'n' and 'edges'")
        except GraphError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        with lock:
            try:
                report = live.add_counterexample(graph)
            except CeilingExceededError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
            report["graphs"] = len(live.table.rows)
            return report

    @app.post("/theorems")
    def post_theorem(request: TheoremRequest) -> dict:
        live = require_agent()
        with lock:
            match = None
            for pools in (live.upper_pools, live.lower_pools):
                for pool in pools.values():
                    for conjecture in pool:
                        if conjecture_id(conjecture) == request.conjecture_id:
                            match = conjecture
            if match is None:
                raise HTTPException(
                    status_code=404,
                    detail=f"no pooled conjecture with id {request.conjecture_id!r}",
                )
            if not holds_on(match, live.table)[0]:
                raise HTTPException(
                    status_code=409,
                    detail="conjecture is no longer valid on the current table",
                )
            live.learn_theorems([match])
            return {
                "learned": _conjecture_payload(match, "theorem"),
                "known_theorems": len(live.known_theorems),
            }

    @app.get("/theorems")
    def get_theorems() -> dict:
        live = require_agent()
        return {
            "theorems": [
                {"id": conjecture_id(c), "text": render(c)}
                for c in live.known_theorems
            ]
        }

    @app.get("/log")
    def get_log() -> dict:
        live = require_agent()
        return {"events": list(live.event_log)}

    @app.post("/save")
    def post_save(request: SaveRequest) -> dict:
        live = require_agent()
        with lock:
            live.save_session(request.path)
        return {"saved": request.path}

    return app
