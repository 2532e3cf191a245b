"""Command-line entry points: batch conjecturing, replay scripts, and serving.

Reports are written to stdout with no timestamps, so identical invocations on
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .agent import AgentConfig, Optimist, SessionFormatError
from .conjectures import (
    conjecture_from_json,
    conjecture_to_json,
    render,
)
from .graphs import Graph, GraphError, graph_from_json_dict, parse_graph6

__all__ = ["main"]


CONFIG_ENV_VAR = "OPTIMIST_CONFIG"


class CliError(Exception):
    """User-facing CLI failure with a message and nonzero exit."""


def _config_defaults() -> dict:
    """Optional defaults from the JSON file named by $OPTIMIST_CONFIG.

    Recognized keys: ``smokey_mode`` and ``min_touch``.  Explicit command-line
    flags always win.
    """
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from exc
    defaults = {}
    if "smokey_mode" in payload:
        if payload["smokey_mode"] not in ("weak", "strong"):
            raise CliError(f"config smokey_mode must be weak or strong")
        defaults["smokey"] = payload["smokey_mode"]
    if "min_touch" in payload:
        defaults["min_touch"] = int(payload["min_touch"])
    return defaults


def load_graph_collection(path: str | Path) -> list[Graph]:
    """Read graphs from a file or directory.

    ``.g6`` files hold one graph6 string per non-blank line; ``.json`` files
    hold one edge-list object or a list of them.  A directory is read in
    sorted filename order so the row order is reproducible.
    """
    target = Path(path)
    if not target.exists():
        raise CliError(f"graph input {target} does not exist")
    files = sorted(p for p in target.iterdir() if p.is_file()) if target.is_dir() else [target]
    graphs: list[Graph] = []
    for file in files:
        if file.suffix == ".g6":
            for line_number, line in enumerate(file.read_text().splitlines(), start=1):
                if not line.strip():
                    continue
                try:
                    graphs.append(parse_graph6(line))
                except GraphError as exc:
                    raise CliError(f"{file}:{line_number}: {exc}") from exc
        elif file.suffix == ".json":
            try:
                payload = json.loads(file.read_text())
            except json.JSONDecodeError as exc:
                raise CliError(f"{file}: invalid JSON: {exc}") from exc
            entries = payload if isinstance(payload, list) else [payload]
            for entry in entries:
                try:
                    graphs.append(graph_from_json_dict(entry))
                except GraphError as exc:
                    raise CliError(f"{file}: {exc}") from exc
        else:
            raise CliError(f"{file}: unsupported graph file type (use .g6 or .json)")
    if not graphs:
        raise CliError(f"no graphs found in {target}")
    return graphs


def _load_known_theorems(path: str | None):
    if path is None:
        return []
    try:
        payload = json.loads(Path(path).read_text())
        return [conjecture_from_json(entry) for entry in payload]
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise CliError(f"cannot read known-theorem file {path}: {exc}") from exc


def cmd_conjecture(args: argparse.Namespace) -> int:
    graphs = load_graph_collection(args.graphs)
    config = AgentConfig(smokey_mode=args.smokey, min_touch=args.min_touch)
    agent = Optimist(graphs, known_theorems=_load_known_theorems(args.known), config=config)
    if args.target not in agent.table.numeric_columns:
        raise CliError(
            f"unknown target {args.target!r}; numeric columns are "
            f"{', '.join(agent.table.numeric_columns)}"
        )
    print(agent.write_on_the_wall(args.target))
    if args.out:
        pools = {
            "target": args.target,
            "upper": [conjecture_to_json(c) for c in agent.upper_pools[args.target]],
            "lower": [conjecture_to_json(c) for c in agent.lower_pools[args.target]],
        }
        Path(args.out).write_text(json.dumps(pools, indent=2) + "\n")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    if args.session:
        try:
            agent = Optimist.load_session(args.session)
        except SessionFormatError as exc:
            raise CliError(str(exc)) from exc
    elif args.graphs:
        agent = Optimist(load_graph_collection(args.graphs))
    else:
        raise CliError("serve needs --session FILE or --graphs PATH")
    app = create_app(agent, session_path=args.session)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except SystemExit as exc:  # uvicorn signals startup failures this way
        raise CliError(f"server failed to start on {args.host}:{args.port}") from exc
    finally:
        if args.session:
            agent.save_session(args.session)
    return 0


def _iter_script_events(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise CliError(f"cannot read script {path}: {exc}") from exc
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            event = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CliError(f"{path}:{line_number}: invalid JSON event: {exc}") from exc
        if not isinstance(event, dict) or "event" not in event:
            raise CliError(f"{path}:{line_number}: events need an 'event' key")
        yield line_number, event


def _event_graph(event: dict, context: str) -> Graph:
    try:
        if "graph6" in event:
            return parse_graph6(event["graph6"])
        return graph_from_json_dict(event)
    except GraphError as exc:
        raise CliError(f"{context}: {exc}") from exc


def _find_pooled(agent: Optimist, event: dict, context: str):
    target = event.get("target")
    pools = {"upper": agent.upper_pools, "lower": agent.lower_pools}
    if "text" in event:
        for direction in ("upper", "lower"):
            for conjecture in pools[direction].get(target, []):
                if render(conjecture) == event["text"]:
                    return conjecture
        raise CliError(f"{context}: no pooled conjecture renders as {event['text']!r}")
    if "bound" in event and "index" in event:
        pool = pools.get(event["bound"], {}).get(target, [])
        index = event["index"]
        if not 0 <= index < len(pool):
            raise CliError(f"{context}: index {index} out of range for {event['bound']} pool")
        return pool[index]
    raise CliError(f"{context}: learn-theorem needs 'text' or 'bound'+'index'")


def cmd_replay(args: argparse.Namespace) -> int:
    """Execute an ordered event script against a fresh session.

    Leading add-graph events seed the initial knowledge base; later ones go
    through the counterexample path.  Output is deterministic.
    """
    path = Path(args.script)
    agent: Optimist | None = None
    pending: list[Graph] = []
    config = AgentConfig(smokey_mode=args.smokey, min_touch=args.min_touch)
    last_target = None

    for line_number, event in _iter_script_events(path):
        context = f"{path}:{line_number}"
        kind = event["event"]
        if kind == "add-graph":
            graph = _event_graph(event, context)
            if agent is None:
                pending.append(graph)
            else:
                report = agent.add_counterexample(graph)
                print(
                    f"Added {report['graph_name']}: "
                    f"{len(report['falsified'])} falsified, "
                    f"{len(report['removed'])} removed, {len(report['added'])} added"
                )
        elif kind in ("conjecture", "learn-theorem"):
            if agent is None:
                if not pending:
                    raise CliError(f"{context}: no graphs added before {kind!r}")
                agent = Optimist(pending, config=config)
            if kind == "conjecture":
                last_target = event.get("target")
                if last_target is None:
                    raise CliError(f"{context}: conjecture event needs 'target'")
                print(agent.write_on_the_wall(last_target))
            else:
                conjecture = _find_pooled(agent, event, context)
                agent.learn_theorems([conjecture])
                print(f"Learned: {render(conjecture)}")
        else:
            raise CliError(f"{context}: unknown event {kind!r}")

    print()
    print("=== Final report ===")
    if agent is None:
        print("Empty session: no events produced an agent.")
        return 0
    if last_target is not None:
        print(agent.write_on_the_wall(last_target))
    print("Known theorems:")
    for index, theorem in enumerate(agent.known_theorems):
        print(f"Theorem {index}. {render(theorem)}")
    print()
    print("Event log:")
    for entry in agent.event_log:
        print(json.dumps(entry, sort_keys=True))
    if args.session_out:
        agent.save_session(args.session_out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optimist",
        description="Automated conjecturing on graph invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    conjecture = sub.add_parser("conjecture", help="run one conjecture sweep and print the report")
    conjecture.add_argument("--graphs", required=True, help="graph file or directory (.g6 / .json)")
    conjecture.add_argument("--target", required=True, help="numeric column to bound")
    conjecture.add_argument("--smokey", choices=("weak", "strong"), default=None)
    conjecture.add_argument("--min-touch", type=int, default=None)
    conjecture.add_argument("--known", help="JSON file of known theorems to filter out")
    conjecture.add_argument("--out", help="write the surviving pools as JSON")
    conjecture.set_defaults(func=cmd_conjecture)

    serve = sub.add_parser("serve", help="serve one session over HTTP")
    serve.add_argument("--session", help="session file to load and save on shutdown")
    serve.add_argument("--graphs", help="start a fresh session from these graphs")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    replay = sub.add_parser("replay", help="execute an ordered event script")
    replay.add_argument("--script", required=True, help="JSON-lines event script")
    replay.add_argument("--smokey", choices=("weak", "strong"), default=None)
    replay.add_argument("--min-touch", type=int, default=None)
    replay.add_argument("--session-out", help="save the final session here")
    replay.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "smokey"):
            defaults = _config_defaults()
            if args.smokey is None:
                args.smokey = defaults.get("smokey", "weak")
            if args.min_touch is None:
                args.min_touch = defaults.get("min_touch", 1)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
