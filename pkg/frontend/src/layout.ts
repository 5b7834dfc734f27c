// Deterministic board layouts: cycles on a circle, forests as layered
// tidy trees, anything else via seeded force relaxation with a fixed
// iteration count.  The same state must always produce the same points.

import { GameState, Point } from "./types.js";

const CANVAS = 1000;
const MARGIN = 70;

function adjacency(n: number, edges: [number, number][]): number[][] {
  const adj: number[][] = Array.from({ length: n }, () => []);
  for (const [u, v] of edges) {
    adj[u].push(v);
    adj[v].push(u);
  }
  for (const list of adj) list.sort((a, b) => a - b);
  return adj;
}

function components(n: number, adj: number[][]): number[][] {
  const seen = new Array<boolean>(n).fill(false);
  const out: number[][] = [];
  for (let s = 0; s < n; s++) {
    if (seen[s]) continue;
    const stack = [s];
    seen[s] = true;
    const comp: number[] = [];
    while (stack.length) {
      const u = stack.pop()!;
      comp.push(u);
      for (const w of adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push(w);
        }
      }
    }
    out.push(comp.sort((a, b) => a - b));
  }
  return out;
}

function isCycle(n: number, edges: [number, number][], adj: number[][]): boolean {
  return n >= 3 && edges.length === n && adj.every((a) => a.length === 2) &&
    components(n, adj).length === 1;
}

function isForest(n: number, edges: [number, number][], adj: number[][]): boolean {
  return edges.length === n - components(n, adj).length;
}

// deterministic PRNG for the force layout
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function circleLayout(n: number): Point[] {
  const r = CANVAS / 2 - MARGIN;
  const c = CANVAS / 2;
  return Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: c + r * Math.cos(angle), y: c + r * Math.sin(angle) };
  });
}

function forestLayout(n: number, adj: number[][]): Point[] {
  const points: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
  let xCursor = 0;
  let maxDepth = 0;
  for (const comp of components(n, adj)) {
    const root = comp[0];
    // post-order leaf counting gives each subtree a horizontal band
    const parent = new Map<number, number>();
    const order: number[] = [];
    const depth = new Map<number, number>([[root, 0]]);
    const stack = [root];
    parent.set(root, -1);
    while (stack.length) {
      const v = stack.pop()!;
      order.push(v);
      for (const w of adj[v]) {
        if (!parent.has(w)) {
          parent.set(w, v);
          depth.set(w, depth.get(v)! + 1);
          stack.push(w);
        }
      }
    }
    const x = new Map<number, number>();
    for (let i = order.length - 1; i >= 0; i--) {
      const v = order[i];
      const children = adj[v].filter((w) => parent.get(w) === v);
      if (children.length === 0) {
        x.set(v, xCursor++);
      } else {
        const xs = children.map((c) => x.get(c)!);
        x.set(v, xs.reduce((a, b) => a + b, 0) / xs.length);
      }
      maxDepth = Math.max(maxDepth, depth.get(v)!);
    }
    for (const v of comp) {
      points[v] = { x: x.get(v)!, y: depth.get(v)! };
    }
    xCursor += 1; // gap between components
  }
  const width = Math.max(1, xCursor - 1);
  const height = Math.max(1, maxDepth);
  return points.map((p) => ({
    x: MARGIN + ((CANVAS - 2 * MARGIN) * p.x) / width,
    y: MARGIN + ((CANVAS - 2 * MARGIN) * p.y) / height,
  }));
}

function forceLayout(n: number, edges: [number, number][]): Point[] {
  let seed = n * 2654435761;
  for (const [u, v] of edges) seed = (seed ^ (u * 65537 + v)) >>> 0;
  const rand = mulberry32(seed);
  const pts: Point[] = Array.from({ length: n }, () => ({
    x: MARGIN + rand() * (CANVAS - 2 * MARGIN),
    y: MARGIN + rand() * (CANVAS - 2 * MARGIN),
  }));
  const ideal = (CANVAS - 2 * MARGIN) / Math.max(2, Math.sqrt(n));
  for (let iter = 0; iter < 150; iter++) {
    const step = 0.1 * (1 - iter / 150) * ideal;
    const disp: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        const dx = pts[u].x - pts[v].x;
        const dy = pts[u].y - pts[v].y;
        const d2 = Math.max(1, dx * dx + dy * dy);
        const f = (ideal * ideal) / d2;
        disp[u].x += dx * f;
        disp[u].y += dy * f;
        disp[v].x -= dx * f;
        disp[v].y -= dy * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const d = Math.max(1, Math.sqrt(dx * dx + dy * dy));
      const f = d / ideal;
      disp[u].x -= dx * f;
      disp[u].y -= dy * f;
      disp[v].x += dx * f;
      disp[v].y += dy * f;
    }
    for (let v = 0; v < n; v++) {
      pts[v].x = Math.min(CANVAS - MARGIN, Math.max(MARGIN, pts[v].x + step * Math.tanh(disp[v].x / ideal)));
      pts[v].y = Math.min(CANVAS - MARGIN, Math.max(MARGIN, pts[v].y + step * Math.tanh(disp[v].y / ideal)));
    }
  }
  return pts;
}

export function layoutGraph(state: Pick<GameState, "n" | "edges">): Point[] {
  const { n, edges } = state;
  if (n === 0) return [];
  const adj = adjacency(n, edges);
  if (isCycle(n, edges, adj)) return circleLayout(n);
  if (isForest(n, edges, adj)) return forestLayout(n, adj);
  return forceLayout(n, edges);
}

export const LAYOUT_CANVAS = CANVAS;
