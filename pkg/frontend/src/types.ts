/** Payload shapes of the session service. Mirrored exactly, never mutated. */

export type Relation = "<=" | ">=" | "=";
export type Direction = "upper" | "lower";

export interface ConjectureView {
  id: string;
  text: string;
  relation: Relation;
  direction: Direction;
  touch: number;
  sharps: string[];
  hypothesis: string;
  hypothesis_display: string;
  target: string;
  terms: { coef: string; feature: string }[];
  intercept: string;
}

export interface ConjectureBoard {
  target: string;
  upper: ConjectureView[];
  lower: ConjectureView[];
}

export interface StateSummary {
  graphs: number;
  graph_names: string[];
  numeric_columns: string[];
  boolean_columns: string[];
  targets: Record<string, { upper: number; lower: number }>;
  known_theorems: number;
  config: { smokey_mode: string; min_touch: number; ceiling: number };
}

export interface GraphUpdateReport {
  graph_name: string;
  graphs: number;
  removed: string[];
  added: string[];
  falsified: string[];
}

export interface TheoremEntry {
  id: string;
  text: string;
}

export interface LogEvent {
  seq: number;
  event: string;
  [key: string]: unknown;
}
