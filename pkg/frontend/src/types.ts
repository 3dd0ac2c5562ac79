/** Wire types mirroring the session service JSON exactly. */

export interface GraphDocument {
  version: number;
  v: number[];
  e: [number, number][];
}

export interface Foliage {
  leaves: number[];
  axils: number[];
  twins: [number, number][];
}

export interface BellTarget {
  pair_a: [number, number];
  pair_b: [number, number];
}

export type TargetStatus = "none" | "feasible" | "infeasible" | "unknown_budget";

export interface SessionView {
  id: string;
  document: GraphDocument;
  foliage: Foliage;
  components: number[][];
  history: string[];
  history_length: number;
  target: BellTarget | null;
  target_status: TargetStatus;
}

export type StepRequest =
  | { op: "lc"; vertex: number }
  | { op: "measure"; vertex: number; basis: "X" | "Y" | "Z"; neighbor?: number }
  | { op: "cz"; u: number; v: number }
  | { op: "undo" };
