/** Thin typed client for the session service. One request per method call. */

import type {
  ConjectureBoard,
  GraphUpdateReport,
  LogEvent,
  StateSummary,
  TheoremEntry,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(status: number, detail: string) {
    super(`service responded ${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

async function parseDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") return body.detail;
    return JSON.stringify(body);
  } catch {
    return response.statusText;
  }
}

export class ApiClient {
  readonly baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  getState(): Promise<StateSummary> {
    return this.request<StateSummary>("/state");
  }

  getConjectures(target: string): Promise<ConjectureBoard> {
    return this.request<ConjectureBoard>(
      `/conjectures/${encodeURIComponent(target)}`,
    );
  }

  postGraph(
    payload: { graph6: string } | { n: number; edges: number[][] },
  ): Promise<GraphUpdateReport> {
    return this.request<GraphUpdateReport>("/graphs", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  postTheorem(conjectureId: string): Promise<{ learned: unknown; known_theorems: number }> {
    return this.request("/theorems", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ conjecture_id: conjectureId }),
    });
  }

  async getTheorems(): Promise<TheoremEntry[]> {
    const body = await this.request<{ theorems: TheoremEntry[] }>("/theorems");
    return body.theorems;
  }

  async getLog(): Promise<LogEvent[]> {
    const body = await this.request<{ events: LogEvent[] }>("/log");
    return body.events;
  }
}
