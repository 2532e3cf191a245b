/** Board state and actions. Every mutation is exactly one service request,
 *  at most one mutation is in flight, and every refresh re-reads the service
 *  so a hard reload always reproduces the same board. */

import { ApiClient, ApiError } from "./api.js";
import { GraphDraft } from "./draft.js";
import { parseGraph6 } from "./graph6.js";
import type {
  ConjectureBoard,
  ConjectureView,
  StateSummary,
  TheoremEntry,
} from "./types.js";

export interface StoreState {
  connected: boolean;
  connectionError: string | null;
  summary: StateSummary | null;
  selectedTarget: string | null;
  board: ConjectureBoard | null;
  theorems: TheoremEntry[];
  pending: boolean;
  notice: string | null;
  inlineError: string | null;
  falsified: ConjectureView[];
}

type Listener = (state: StoreState) => void;

const DEFAULT_TARGET = "independence_number";

export class BoardStore {
  private readonly api: ApiClient;
  private listeners: Listener[] = [];

  state: StoreState = {
    connected: false,
    connectionError: null,
    summary: null,
    selectedTarget: null,
    board: null,
    theorems: [],
    pending: false,
    notice: null,
    inlineError: null,
    falsified: [],
  };

  constructor(api: ApiClient) {
    this.api = api;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(patch: Partial<StoreState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      try {
        listener(this.state);
      } catch (error) {
        // a rendering failure must never derail the request sequencing
        console.error("store listener failed", error);
      }
    }
  }

  async initialize(): Promise<void> {
    await this.refresh();
    if (this.state.connected && this.state.selectedTarget === null) {
      const summary = this.state.summary!;
      const target = summary.numeric_columns.includes(DEFAULT_TARGET)
        ? DEFAULT_TARGET
        : summary.numeric_columns[0];
      await this.selectTarget(target);
    }
  }

  /** Re-read everything the board shows from the service. */
  async refresh(): Promise<void> {
    try {
      const summary = await this.api.getState();
      const theorems = await this.api.getTheorems();
      let board = this.state.board;
      if (this.state.selectedTarget !== null) {
        board = await this.api.getConjectures(this.state.selectedTarget);
      }
      this.emit({ connected: true, connectionError: null, summary, theorems, board });
    } catch (error) {
      this.emit({
        connected: false,
        connectionError: describe(error),
      });
    }
  }

  async selectTarget(target: string): Promise<void> {
    try {
      const board = await this.api.getConjectures(target);
      this.emit({
        selectedTarget: target,
        board,
        connected: true,
        connectionError: null,
        falsified: [],
        notice: null,
        inlineError: null,
      });
    } catch (error) {
      if (error instanceof ApiError) {
        this.emit({ inlineError: error.detail });
      } else {
        this.emit({ connected: false, connectionError: describe(error) });
      }
    }
  }

  /** Submit the adjacency-grid draft as a counterexample graph. */
  async submitDraft(draft: GraphDraft): Promise<void> {
    if (!draft.isValid()) {
      this.emit({ inlineError: "draft is not a valid simple graph" });
      return;
    }
    await this.submitGraphPayload(draft.toPayload());
  }

  /** Submit a pasted graph6 string; malformed input never leaves the browser. */
  async submitGraph6(text: string): Promise<void> {
    try {
      parseGraph6(text);
    } catch (error) {
      this.emit({ inlineError: `graph6: ${(error as Error).message}` });
      return;
    }
    await this.submitGraphPayload({ graph6: text.trim() });
  }

  private async submitGraphPayload(
    payload: { graph6: string } | { n: number; edges: number[][] },
  ): Promise<void> {
    if (this.state.pending) return;
    this.emit({ pending: true, inlineError: null, notice: null });
    const previous = this.state.board;
    try {
      const report = await this.api.postGraph(payload);
      const falsified = collectViews(previous, report.falsified);
      const notice =
        falsified.length > 0
          ? `${report.graph_name} falsified ${falsified.length} conjecture(s)`
          : `${report.graph_name} added; no conjectures falsified`;
      this.emit({ falsified, notice });
      await this.refresh();
    } catch (error) {
      if (error instanceof ApiError) {
        this.emit({ inlineError: error.detail });
      } else {
        this.emit({ connected: false, connectionError: describe(error) });
      }
    } finally {
      this.emit({ pending: false });
    }
  }

  /** Promote one pooled conjecture to a known theorem. */
  async markTheorem(conjectureId: string): Promise<void> {
    if (this.state.pending) return;
    this.emit({ pending: true, inlineError: null, notice: null });
    try {
      await this.api.postTheorem(conjectureId);
      this.emit({ notice: "conjecture recorded as a known theorem" });
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.emit({ notice: "conjecture was no longer pooled; board refreshed" });
      } else if (error instanceof ApiError && error.status === 409) {
        this.emit({ inlineError: "conjecture is stale; refreshing the board" });
      } else if (error instanceof ApiError) {
        this.emit({ inlineError: error.detail });
      } else {
        this.emit({ connected: false, connectionError: describe(error) });
        this.emit({ pending: false });
        return;
      }
    }
    await this.refresh();
    this.emit({ pending: false });
  }
}

function collectViews(
  board: ConjectureBoard | null,
  ids: string[],
): ConjectureView[] {
  if (board === null) return [];
  const wanted = new Set(ids);
  return [...board.upper, ...board.lower].filter((c) => wanted.has(c.id));
}

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
