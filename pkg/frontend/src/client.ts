// Thin fetch wrapper over the game API plus the move queue: at most one
// move request may be in flight; extra clicks queue behind it.

import { AnalysisRow, ApiError, GameState } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  constructor(public status: number, public error: ApiError) {
    super(error.message);
  }
}

async function parseResponse<T>(res: Response): Promise<T> {
  const body = await res.json();
  if (!res.ok) {
    throw new ApiRequestError(res.status, body as ApiError);
  }
  return body as T;
}

export class GameClient {
  private pending: Promise<unknown> = Promise.resolve();

  constructor(private fetchImpl: FetchLike, private base = "") {}

  async createGame(graphText: string, human: "A" | "B"): Promise<{ id: string; state: GameState }> {
    const res = await this.fetchImpl(`${this.base}/api/games`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ graph: graphText, human }),
    });
    return parseResponse(res);
  }

  async getState(id: string): Promise<GameState> {
    const res = await this.fetchImpl(`${this.base}/api/games/${id}`);
    return parseResponse(res);
  }

  /** Serialized move submission: one in-flight request, later calls queue. */
  playMove(id: string, vertex: number): Promise<GameState> {
    const next = this.pending.then(
      () => this.postMove(id, vertex),
      () => this.postMove(id, vertex),
    );
    this.pending = next.catch(() => undefined);
    return next;
  }

  private async postMove(id: string, vertex: number): Promise<GameState> {
    const res = await this.fetchImpl(`${this.base}/api/games/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
    return parseResponse(res);
  }

  async getAnalysis(id: string): Promise<AnalysisRow[]> {
    const res = await this.fetchImpl(`${this.base}/api/games/${id}/analysis`);
    return parseResponse(res);
  }
}
