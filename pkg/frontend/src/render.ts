// SVG board rendering; all interaction is delegated back to the controller.

import { LAYOUT_CANVAS } from "./layout.js";
import { GameState } from "./types.js";
import { BoardViewModel } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderBoard(
  svg: SVGSVGElement,
  banner: HTMLElement,
  analysisPanel: HTMLElement,
  vm: BoardViewModel,
  state: GameState,
  onClick: (v: number) => void,
): void {
  svg.setAttribute("viewBox", `0 0 ${LAYOUT_CANVAS} ${LAYOUT_CANVAS}`);
  svg.replaceChildren();
  for (const [u, v] of vm.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(vm.vertices[u].point.x));
    line.setAttribute("y1", String(vm.vertices[u].point.y));
    line.setAttribute("x2", String(vm.vertices[v].point.x));
    line.setAttribute("y2", String(vm.vertices[v].point.y));
    line.setAttribute("class", "edge");
    svg.appendChild(line);
  }
  for (const vert of vm.vertices) {
    const g = document.createElementNS(SVG_NS, "g");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(vert.point.x));
    circle.setAttribute("cy", String(vert.point.y));
    circle.setAttribute("r", vert.inDominatingSet ? "26" : "20");
    circle.setAttribute("fill", vert.color);
    circle.setAttribute("class", "vertex" + (vert.selectable ? " selectable" : "") +
      (vert.inDominatingSet ? " winner" : ""));
    if (vert.selectable) {
      circle.addEventListener("click", () => onClick(vert.id));
    }
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(vert.point.x));
    label.setAttribute("y", String(vert.point.y + 5));
    label.setAttribute("class", "vertex-label");
    label.textContent = String(vert.id);
    g.appendChild(circle);
    g.appendChild(label);
    svg.appendChild(g);
  }
  banner.textContent = vm.banner;
  banner.dataset.status = state.status;

  analysisPanel.replaceChildren();
  if (vm.analysis.length) {
    const table = document.createElement("table");
    table.innerHTML = "<tr><th>vertex</th><th>outcome</th><th>plies</th></tr>";
    for (const row of vm.analysis) {
      const tr = document.createElement("tr");
      tr.innerHTML = `<td>${row.vertex}</td><td>${row.outcome}</td><td>${row.plies}</td>`;
      table.appendChild(tr);
    }
    analysisPanel.appendChild(table);
  }
}

export function showToast(container: HTMLElement, message: string): void {
  const div = document.createElement("div");
  div.className = "toast";
  div.textContent = message;
  container.appendChild(div);
  setTimeout(() => div.remove(), 4000);
}
