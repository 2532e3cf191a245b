"""The conjecturing agent: knowledge table, conjecture pools, and the feedback loop.

One agent owns one growing knowledge table plus per-target pools of upper and
lower conjectures.  Counterexample graphs append a row and force a full
pipeline re-run for every target ever conjectured; learned theorems are
validated, stored, and subtracted from future output.  Every mutation lands
in an append-only event log with a logical sequence number (no wall-clock
timestamps: replays must be byte-identical).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .conjectures import (
    Conjecture,
    conjecture_from_json,
    conjecture_id,
    conjecture_to_json,
    holds_on,
    render,
)
from .graphs import Graph, encode_graph6
from .invariants import InvariantRegistry, default_registry
from .pipeline import run_pipeline
from .table import KnowledgeTable

__all__ = ["AgentConfig", "Optimist", "SessionFormatError"]

SESSION_VERSION = 1


class SessionFormatError(ValueError):
    """Raised when a session file cannot be loaded."""


@dataclass(frozen=True)
class AgentConfig:
    smokey_mode: str = "weak"
    min_touch: int = 1
    ceiling: int = 20
    big_M: int = 1000


class Optimist:
    """Stateful orchestration of the learn / conjecture / refine loop."""

    def __init__(
        self,
        graphs: list[Graph],
        registry: InvariantRegistry | None = None,
        known_theorems: list[Conjecture] | None = None,
        config: AgentConfig | None = None,
    ):
        if not graphs:
            raise ValueError("the agent needs at least one starting graph")
        self.config = config or AgentConfig()
        self.registry = registry or default_registry(self.config.ceiling)
        self.table = KnowledgeTable.build(graphs, self.registry)
        self.known_theorems: list[Conjecture] = list(known_theorems or [])
        self.upper_pools: dict[str, list[Conjecture]] = {}
        self.lower_pools: dict[str, list[Conjecture]] = {}
        self.event_log: list[dict] = []
        self._log("session-initialized", graphs=len(graphs))

    # ------------------------------------------------------------------
    # event log
    # ------------------------------------------------------------------

    def _log(self, event: str, **details) -> None:
        self.event_log.append({"seq": len(self.event_log), "event": event, **details})

    # ------------------------------------------------------------------
    # conjecturing
    # ------------------------------------------------------------------

    def conjecture(self, target: str) -> tuple[list[Conjecture], list[Conjecture]]:
        """Run the full pipeline for a target and store the resulting pools."""
        uppers, lowers = run_pipeline(
            self.table,
            target,
            known_theorems=self.known_theorems,
            smokey_mode=self.config.smokey_mode,
            min_touch=self.config.min_touch,
            big_M=self.config.big_M,
        )
        self.upper_pools[target] = uppers
        self.lower_pools[target] = lowers
        self._log(
            "conjectures-generated",
            target=target,
            upper=len(uppers),
            lower=len(lowers),
        )
        return uppers, lowers

    def _regenerate_pools(self) -> None:
        for target in sorted(set(self.upper_pools) | set(self.lower_pools)):
            uppers, lowers = run_pipeline(
                self.table,
                target,
                known_theorems=self.known_theorems,
                smokey_mode=self.config.smokey_mode,
                min_touch=self.config.min_touch,
                big_M=self.config.big_M,
            )
            self.upper_pools[target] = uppers
            self.lower_pools[target] = lowers

    def _pool_ids(self) -> dict[str, Conjecture]:
        out: dict[str, Conjecture] = {}
        for pools in (self.upper_pools, self.lower_pools):
            for conjectures in pools.values():
                for conjecture in conjectures:
                    out[conjecture_id(conjecture)] = conjecture
        return out

    # ------------------------------------------------------------------
    # feedback
    # ------------------------------------------------------------------

    def add_counterexample(self, graph: Graph) -> dict:
        """Append a graph and regenerate every stored pool.

        Returns a report with the new row name plus the pool diff: conjecture
        ids that disappeared (with the falsified subset) and ids that
        appeared.  On any failure the agent is unchanged.
        """
        before = self._pool_ids()
        new_table = self.table.append_graph(graph, self.registry)
        falsified = sorted(
            cid for cid, conjecture in before.items()
            if not holds_on(conjecture, new_table)[0]
        )
        self.table = new_table
        name = self.table.rows[-1][0]
        self._regenerate_pools()
        after = self._pool_ids()
        removed = sorted(cid for cid in before if cid not in after)
        added = sorted(cid for cid in after if cid not in before)
        self._log(
            "graph-added",
            name=name,
            graph6=encode_graph6(graph),
            removed=removed,
            added=added,
            falsified=falsified,
        )
        return {
            "graph_name": name,
            "removed": removed,
            "added": added,
            "falsified": falsified,
        }

    def learn_theorems(self, conjectures: list[Conjecture]) -> None:
        """Promote conjectures to known theorems and purge them from pools.

        Each statement must currently be valid on the table; accepting a
        falsifiable "theorem" would silently poison later filtering.
        """
        if not conjectures:
            return
        for conjecture in conjectures:
            valid, bad = holds_on(conjecture, self.table)
            if not valid:
                raise ValueError(
                    f"refusing to learn a falsified statement "
                    f"({render(conjecture)}); counterexamples: {sorted(bad)}"
                )
        self.known_theorems.extend(conjectures)
        self._regenerate_pools()
        self._log(
            "theorems-learned",
            statements=[render(c) for c in conjectures],
        )

    # ------------------------------------------------------------------
    # reporting
    # ------------------------------------------------------------------

    def write_on_the_wall(self, target: str) -> str:
        """Format the stored pools for one target; generates them if absent."""
        if target not in self.upper_pools or target not in self.lower_pools:
            self.conjecture(target)
        lines = [f"Conjectures for {target}", ""]
        lines.append("Upper bounds:")
        for index, conjecture in enumerate(self.upper_pools[target]):
            lines.append(f"Conjecture U{index}. {render(conjecture)}")
            lines.append(f"With equality on {conjecture.touch} graphs.")
            lines.append("")
        lines.append("Lower bounds:")
        for index, conjecture in enumerate(self.lower_pools[target]):
            lines.append(f"Conjecture L{index}. {render(conjecture)}")
            lines.append(f"With equality on {conjecture.touch} graphs.")
            lines.append("")
        return "\n".join(lines)

    # ------------------------------------------------------------------
    # persistence
    # ------------------------------------------------------------------

    def save_session(self, path: str | Path) -> None:
        """Write the whole session as one JSON document."""
        payload = {
            "version": SESSION_VERSION,
            "config": {
                "smokey_mode": self.config.smokey_mode,
                "min_touch": self.config.min_touch,
                "ceiling": self.config.ceiling,
                "big_M": self.config.big_M,
            },
            "table_csv": self.table.to_csv_text(),
            "table_sidecar": self.table.sidecar_dict(),
            "known_theorems": [conjecture_to_json(c) for c in self.known_theorems],
            "upper_pools": {
                target: [conjecture_to_json(c) for c in pool]
                for target, pool in self.upper_pools.items()
            },
            "lower_pools": {
                target: [conjecture_to_json(c) for c in pool]
                for target, pool in self.lower_pools.items()
            },
            "event_log": self.event_log,
        }
        Path(path).write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    @classmethod
    def load_session(cls, path: str | Path) -> "Optimist":
        """Rebuild a session saved by ``save_session``; no partial state on error."""
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise SessionFormatError(f"cannot read session file {path}: {exc}") from exc
        if not isinstance(payload, dict) or payload.get("version") != SESSION_VERSION:
            raise SessionFormatError(
                f"unsupported session version {payload.get('version') if isinstance(payload, dict) else payload!r}"
            )
        try:
            config = AgentConfig(**payload["config"])
            table = KnowledgeTable.from_csv_text(
                payload["table_csv"], payload["table_sidecar"]
            )
            agent = cls.__new__(cls)
            agent.config = config
            agent.registry = default_registry(config.ceiling)
            agent.table = table
            agent.known_theorems = [
                conjecture_from_json(c) for c in payload["known_theorems"]
            ]
            agent.upper_pools = {
                target: [conjecture_from_json(c) for c in pool]
                for target, pool in payload["upper_pools"].items()
            }
            agent.lower_pools = {
                target: [conjecture_from_json(c) for c in pool]
                for target, pool in payload["lower_pools"].items()
            }
            agent.event_log = list(payload["event_log"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SessionFormatError(f"malformed session file {path}: {exc}") from exc
        return agent
