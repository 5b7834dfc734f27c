export type PlayerName = "A" | "B";
export type ClaimMark = "-" | "A" | "B";

export interface GameState {
  n: number;
  edges: [number, number][];
  claims: ClaimMark[];
  turn: PlayerName;
  status: "ongoing" | "alice-dominates" | "bob-dominates" | "exhausted";
  human: PlayerName;
  history: [PlayerName, number][];
  dominatingSet?: number[];
}

export interface AnalysisRow {
  vertex: number;
  outcome: "A" | "D";
  plies: number;
}

export interface ApiError {
  code: string;
  message: string;
}

export interface Point {
  x: number;
  y: number;
}
