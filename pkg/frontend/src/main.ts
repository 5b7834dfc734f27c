import { GameClient } from "./client.js";
import { GameController } from "./controller.js";
import { renderBoard, showToast } from "./render.js";

const EXAMPLES: Record<string, string> = {
  "path-7": "p 7 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6",
  "cycle-10": "p 10 10\n" + Array.from({ length: 10 }, (_, i) => `e ${i} ${(i + 1) % 10}`).join("\n"),
  "spider-10": "p 10 9\ne 0 1\ne 0 2\ne 2 3\ne 0 4\ne 4 5\ne 1 6\ne 6 7\ne 1 8\ne 8 9",
};

function main(): void {
  const svg = document.querySelector<SVGSVGElement>("#board")!;
  const banner = document.querySelector<HTMLElement>("#banner")!;
  const analysisPanel = document.querySelector<HTMLElement>("#analysis")!;
  const toasts = document.querySelector<HTMLElement>("#toasts")!;
  const graphInput = document.querySelector<HTMLTextAreaElement>("#graph-input")!;
  const humanSelect = document.querySelector<HTMLSelectElement>("#human-select")!;
  const exampleSelect = document.querySelector<HTMLSelectElement>("#example-select")!;
  const startButton = document.querySelector<HTMLButtonElement>("#start")!;
  const analysisToggle = document.querySelector<HTMLInputElement>("#analysis-toggle")!;

  const controller = new GameController(new GameClient(fetch.bind(window)), {
    onRender: (vm, state) => renderBoard(svg, banner, analysisPanel, vm, state,
      (v) => void controller.onVertexClick(v)),
    onToast: (msg) => showToast(toasts, msg),
  });

  exampleSelect.addEventListener("change", () => {
    const text = EXAMPLES[exampleSelect.value];
    if (text) graphInput.value = text;
  });
  graphInput.value = EXAMPLES["cycle-10"];

  startButton.addEventListener("click", () => {
    controller
      .newGame(graphInput.value, humanSelect.value === "B" ? "B" : "A")
      .catch((err) => showToast(toasts, String(err.message ?? err)));
  });

  analysisToggle.addEventListener("change", () => {
    if (controller.analysisOn !== analysisToggle.checked) {
      void controller.toggleAnalysis();
    }
  });
}

main();
