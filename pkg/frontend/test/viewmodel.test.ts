import { describe, expect, it } from "vitest";

import { GameState } from "../src/types.js";
import { CLAIM_COLORS, bannerText, buildViewModel } from "../src/viewmodel.js";

function state(overrides: Partial<GameState> = {}): GameState {
  return {
    n: 3,
    edges: [[0, 1], [1, 2]],
    claims: ["-", "-", "-"],
    turn: "A",
    status: "ongoing",
    human: "A",
    history: [],
    ...overrides,
  };
}

describe("buildViewModel", () => {
  it("marks exactly the unclaimed vertices selectable on the human's turn", () => {
    const vm = buildViewModel(state({ claims: ["A", "-", "B"] }));
    expect(vm.vertices.map((v) => v.selectable)).toEqual([false, true, false]);
  });

  it("marks nothing selectable on the engine's turn", () => {
    const vm = buildViewModel(state({ turn: "B" }));
    expect(vm.vertices.every((v) => !v.selectable)).toBe(true);
  });

  it("marks nothing selectable when the game is over", () => {
    const vm = buildViewModel(state({ status: "alice-dominates", claims: ["-", "A", "-"] }));
    expect(vm.vertices.every((v) => !v.selectable)).toBe(true);
    expect(vm.gameOver).toBe(true);
  });

  it("colors match the claims exactly", () => {
    const vm = buildViewModel(state({ claims: ["A", "-", "B"] }));
    expect(vm.vertices.map((v) => v.color)).toEqual([
      CLAIM_COLORS["A"],
      CLAIM_COLORS["-"],
      CLAIM_COLORS["B"],
    ]);
  });

  it("highlights the dominating set", () => {
    const vm = buildViewModel(
      state({ status: "alice-dominates", claims: ["-", "A", "-"], dominatingSet: [1] }),
    );
    expect(vm.vertices.map((v) => v.inDominatingSet)).toEqual([false, true, false]);
  });
});

describe("bannerText", () => {
  it("announces the human turn by player name", () => {
    expect(bannerText(state())).toBe("Your move (Alice)");
    expect(bannerText(state({ human: "B", turn: "B" }))).toBe("Your move (Bob)");
  });

  it("announces terminal statuses", () => {
    expect(bannerText(state({ status: "alice-dominates" }))).toBe("Alice dominates — Alice wins");
    expect(bannerText(state({ status: "bob-dominates" }))).toBe("Bob dominates — Bob wins");
    expect(bannerText(state({ status: "exhausted" }))).toBe("Board exhausted — draw");
  });

  it("shows the engine thinking otherwise", () => {
    expect(bannerText(state({ turn: "B" }))).toBe("Engine thinking…");
  });
});
