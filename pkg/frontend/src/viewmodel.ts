// Pure presentation logic: what the board shows for a given API state.
// The server stays authoritative; the only game logic here is the
// selectability rule.

import { layoutGraph } from "./layout.js";
import { AnalysisRow, GameState, Point } from "./types.js";

export interface VertexView {
  id: number;
  point: Point;
  claim: "-" | "A" | "B";
  color: string;
  selectable: boolean;
  inDominatingSet: boolean;
}

export interface BoardViewModel {
  vertices: VertexView[];
  edges: [number, number][];
  banner: string;
  gameOver: boolean;
  analysis: AnalysisRow[];
}

export const CLAIM_COLORS: Record<string, string> = {
  "-": "#e8e4d8",
  A: "#d64550",
  B: "#2a6f97",
};

export function bannerText(state: GameState): string {
  switch (state.status) {
    case "alice-dominates":
      return "Alice dominates — Alice wins";
    case "bob-dominates":
      return "Bob dominates — Bob wins";
    case "exhausted":
      return "Board exhausted — draw";
    default:
      return state.turn === state.human
        ? `Your move (${state.human === "A" ? "Alice" : "Bob"})`
        : "Engine thinking…";
  }
}

export function buildViewModel(state: GameState, analysis: AnalysisRow[] = []): BoardViewModel {
  const points = layoutGraph(state);
  const ongoing = state.status === "ongoing";
  const humanTurn = state.turn === state.human;
  const winners = new Set(state.dominatingSet ?? []);
  const vertices = state.claims.map((claim, id) => ({
    id,
    point: points[id],
    claim,
    color: CLAIM_COLORS[claim],
    selectable: claim === "-" && ongoing && humanTurn,
    inDominatingSet: winners.has(id),
  }));
  return {
    vertices,
    edges: state.edges,
    banner: bannerText(state),
    gameOver: !ongoing,
    analysis,
  };
}
