// DOM construction. The whole panel is rebuilt from the ViewState on
// every round trip; the server state is authoritative so there is
// nothing incremental to get wrong.

import type { Point, ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
export const CANVAS = { width: 720, height: 500 };
const VERTEX_RADIUS = 26;

export interface Handlers {
  onVertexClick(index: number): void; // 1-based server index
  onUndo(): void;
  onModel(name: string): void;
  onSeedFile(text: string): void;
  onDragMove(vertex: number, point: Point): void; // 0-based
}

export interface PanelState {
  view: ViewState | null;
  banner: string | null; // error text
  tooltip: string | null; // transient hint, e.g. frozen vertex
  busy: boolean;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function renderToolbar(handlers: Handlers, busy: boolean): HTMLElement {
  const bar = el("div", "toolbar");
  const models: [string, string][] = [
    ["markov", "Markov"],
    ["a3", "A3"],
    ["gr24", "Gr(2,4)"],
  ];
  for (const [name, label] of models) {
    const button = el("button", "model-btn", label);
    button.dataset.model = name;
    button.disabled = busy;
    button.addEventListener("click", () => handlers.onModel(name));
    bar.appendChild(button);
  }
  const file = el("input", "seed-file") as HTMLInputElement;
  file.type = "file";
  file.accept = ".json,application/json";
  file.addEventListener("change", () => {
    const chosen = file.files?.[0];
    if (!chosen) return;
    chosen.text().then((text) => handlers.onSeedFile(text));
  });
  bar.appendChild(file);
  const undo = el("button", "undo", "Undo");
  undo.disabled = busy;
  undo.addEventListener("click", () => handlers.onUndo());
  bar.appendChild(undo);
  return bar;
}

function renderQuiver(view: ViewState, handlers: Handlers): SVGElement {
  const svg = svgEl("svg", {
    class: "quiver",
    viewBox: `0 0 ${CANVAS.width} ${CANVAS.height}`,
    width: String(CANVAS.width),
    height: String(CANVAS.height),
  });
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "currentColor" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const edges = svgEl("g", { class: "edges" });
  for (const arrow of view.arrows) {
    const a = view.vertices[arrow.from]?.position;
    const b = view.vertices[arrow.to]?.position;
    if (!a || !b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const length = Math.hypot(dx, dy) || 1;
    const pad = VERTEX_RADIUS + 6;
    const x1 = a.x + (dx / length) * pad;
    const y1 = a.y + (dy / length) * pad;
    const x2 = b.x - (dx / length) * pad;
    const y2 = b.y - (dy / length) * pad;
    edges.appendChild(
      svgEl("line", {
        class: "edge",
        x1: String(x1),
        y1: String(y1),
        x2: String(x2),
        y2: String(y2),
        "marker-end": "url(#arrowhead)",
      }),
    );
    if (arrow.weight > 1) {
      const label = svgEl("text", {
        class: "edge-weight",
        x: String((x1 + x2) / 2 + (dy / length) * 10),
        y: String((y1 + y2) / 2 - (dx / length) * 10),
        "text-anchor": "middle",
      });
      label.textContent = String(arrow.weight);
      edges.appendChild(label);
    }
  }
  svg.appendChild(edges);

  for (const vertex of view.vertices) {
    const group = svgEl("g", {
      class: vertex.frozen ? "vertex frozen" : "vertex mutable",
      transform: `translate(${vertex.position.x},${vertex.position.y})`,
    });
    group.setAttribute("data-index", String(vertex.index));
    if (vertex.frozen) {
      group.appendChild(
        svgEl("rect", {
          x: String(-VERTEX_RADIUS),
          y: String(-VERTEX_RADIUS * 0.75),
          width: String(2 * VERTEX_RADIUS),
          height: String(1.5 * VERTEX_RADIUS),
          rx: "6",
        }),
      );
    } else {
      group.appendChild(svgEl("circle", { r: String(VERTEX_RADIUS) }));
    }
    const name = svgEl("text", { class: "vertex-name", "text-anchor": "middle", y: "-2" });
    name.textContent = vertex.name;
    group.appendChild(name);
    vertex.degrees.forEach((degree, gi) => {
      const text = svgEl("text", {
        class: "vertex-degree",
        "data-grading": String(gi),
        "text-anchor": "middle",
        y: String(12 + 12 * gi),
      });
      text.textContent = degree;
      group.appendChild(text);
    });

    group.addEventListener("click", () => handlers.onVertexClick(vertex.index));
    attachDrag(group, vertex.index - 1, svg, handlers);
    svg.appendChild(group);
  }
  return svg;
}

function attachDrag(
  group: SVGElement,
  vertex: number,
  svg: SVGElement,
  handlers: Handlers,
): void {
  let dragging = false;
  let moved = false;
  group.addEventListener("pointerdown", (event) => {
    dragging = true;
    moved = false;
    event.preventDefault();
  });
  svg.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    moved = true;
    const rect = (svg as unknown as Element).getBoundingClientRect();
    const e = event as PointerEvent;
    handlers.onDragMove(vertex, {
      x: Math.round(((e.clientX - rect.left) / (rect.width || 1)) * CANVAS.width),
      y: Math.round(((e.clientY - rect.top) / (rect.height || 1)) * CANVAS.height),
    });
  });
  svg.addEventListener("pointerup", () => {
    dragging = false;
    // a drag that moved should not count as a mutation click; the click
    // handler fires after pointerup, so swallow exactly one
    if (moved) {
      const swallow = (event: Event) => {
        event.stopImmediatePropagation();
        group.removeEventListener("click", swallow, true);
      };
      group.addEventListener("click", swallow, true);
    }
  });
}

function renderHistory(history: number[]): HTMLElement {
  const div = el("div", "history");
  div.textContent = history.length
    ? `history: ${history.join(", ")}`
    : "history: (empty)";
  return div;
}

function renderVariables(view: ViewState): HTMLElement {
  const wrap = el("div", "variables-wrap");
  wrap.appendChild(el("h2", undefined, "discovered variables"));
  const table = el("table", "variables");
  const head = el("thead");
  const headRow = el("tr");
  for (const title of ["variable", "degrees", "first seen"]) {
    headRow.appendChild(el("th", undefined, title));
  }
  head.appendChild(headRow);
  table.appendChild(head);
  const body = el("tbody");
  for (const variable of view.variables) {
    const row = el("tr");
    row.appendChild(el("td", "var-pretty", variable.pretty));
    row.appendChild(el("td", "var-degrees", variable.degrees.join("  ")));
    row.appendChild(el("td", "var-step", String(variable.firstSeen)));
    body.appendChild(row);
  }
  table.appendChild(body);
  wrap.appendChild(table);
  return wrap;
}

export function renderApp(root: HTMLElement, panel: PanelState, handlers: Handlers): void {
  root.textContent = "";
  root.appendChild(renderToolbar(handlers, panel.busy));

  const banner = el("div", "banner", panel.banner ?? "");
  if (!panel.banner) banner.classList.add("hidden");
  root.appendChild(banner);

  const tooltip = el("div", "tooltip", panel.tooltip ?? "");
  if (!panel.tooltip) tooltip.classList.add("hidden");
  root.appendChild(tooltip);

  if (!panel.view) {
    root.appendChild(el("p", "placeholder", "load a model to begin"));
    return;
  }
  root.appendChild(el("div", "model-name", `model: ${panel.view.model}`));
  root.appendChild(renderQuiver(panel.view, handlers));
  root.appendChild(renderHistory(panel.view.history));
  root.appendChild(renderVariables(panel.view));
}
