// Game controller: holds the last server state, guards clicks through the
// view-model's selectable flags, and keeps the board unchanged whenever
// the server rejects a move.

import { ApiRequestError, GameClient } from "./client.js";
import { AnalysisRow, GameState } from "./types.js";
import { BoardViewModel, buildViewModel } from "./viewmodel.js";

export interface ControllerEvents {
  onRender?: (vm: BoardViewModel, state: GameState) => void;
  onToast?: (message: string) => void;
}

export class GameController {
  state: GameState | null = null;
  gameId: string | null = null;
  analysisOn = false;
  private analysis: AnalysisRow[] = [];

  constructor(private client: GameClient, private events: ControllerEvents = {}) {}

  viewModel(): BoardViewModel {
    if (!this.state) throw new Error("no game yet");
    return buildViewModel(this.state, this.analysisOn ? this.analysis : []);
  }

  async newGame(graphText: string, human: "A" | "B"): Promise<void> {
    const { id, state } = await this.client.createGame(graphText, human);
    this.gameId = id;
    this.state = state;
    await this.refreshAnalysis();
    this.render();
  }

  /** Click handler: silently ignores unselectable vertices (no request). */
  async onVertexClick(vertex: number): Promise<void> {
    if (!this.state || !this.gameId) return;
    const vm = buildViewModel(this.state);
    const view = vm.vertices[vertex];
    if (!view || !view.selectable) return;
    try {
      this.state = await this.client.playMove(this.gameId, vertex);
      await this.refreshAnalysis();
    } catch (err) {
      if (err instanceof ApiRequestError) {
        // board unchanged on rejection; surface the code as a toast
        this.events.onToast?.(`${err.error.code}: ${err.error.message}`);
      } else {
        throw err;
      }
    }
    this.render();
  }

  async toggleAnalysis(): Promise<void> {
    this.analysisOn = !this.analysisOn;
    await this.refreshAnalysis();
    this.render();
  }

  private async refreshAnalysis(): Promise<void> {
    if (!this.analysisOn || !this.gameId || !this.state || this.state.status !== "ongoing") {
      this.analysis = [];
      return;
    }
    this.analysis = await this.client.getAnalysis(this.gameId);
  }

  private render(): void {
    if (this.state) {
      this.events.onRender?.(this.viewModel(), this.state);
    }
  }
}
