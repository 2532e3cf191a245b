/** The counterexample graph under construction in the adjacency grid. */

export interface DraftFlags {
  selfLoops: [number, number][];
  duplicates: [number, number][];
  outOfRange: [number, number][];
}

export class GraphDraft {
  vertexCount: number;
  edges: [number, number][];

  constructor(vertexCount = 4) {
    this.vertexCount = vertexCount;
    this.edges = [];
  }

  /** Toggle one unordered pair; the grid calls this from both triangle cells. */
  toggle(u: number, v: number): void {
    if (u === v) return; // diagonal cells are inert
    const pair: [number, number] = u < v ? [u, v] : [v, u];
    const index = this.edges.findIndex(([a, b]) => a === pair[0] && b === pair[1]);
    if (index >= 0) {
      this.edges.splice(index, 1);
    } else {
      this.edges.push(pair);
    }
  }

  has(u: number, v: number): boolean {
    const [a, b] = u < v ? [u, v] : [v, u];
    return this.edges.some(([x, y]) => x === a && y === b);
  }

  setVertexCount(n: number): void {
    this.vertexCount = n;
    // edges beyond the new range stay in the list and show up as flags;
    // shrinking and regrowing must not silently lose work
  }

  flags(): DraftFlags {
    const seen = new Set<string>();
    const out: DraftFlags = { selfLoops: [], duplicates: [], outOfRange: [] };
    for (const [u, v] of this.edges) {
      if (u === v) out.selfLoops.push([u, v]);
      if (u < 0 || v < 0 || u >= this.vertexCount || v >= this.vertexCount) {
        out.outOfRange.push([u, v]);
      }
      const key = u < v ? `${u},${v}` : `${v},${u}`;
      if (seen.has(key)) out.duplicates.push([u, v]);
      seen.add(key);
    }
    return out;
  }

  /** Submit is enabled exactly when this is a valid simple graph. */
  isValid(): boolean {
    if (this.vertexCount < 1) return false;
    const flags = this.flags();
    return (
      flags.selfLoops.length === 0 &&
      flags.duplicates.length === 0 &&
      flags.outOfRange.length === 0
    );
  }

  toPayload(): { n: number; edges: number[][] } {
    return { n: this.vertexCount, edges: this.edges.map(([u, v]) => [u, v]) };
  }

  clear(): void {
    this.edges = [];
  }
}
