/** SVG rendering of the risk timeline. Pure DOM construction from a view model. */

import type { TimelineViewModel } from "./model.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 960;
const HEIGHT = 280;
const PAD = 24;

function sx(x: number): number {
  return PAD + x * (WIDTH - 2 * PAD);
}

function sy(y: number): number {
  return HEIGHT - PAD - y * (HEIGHT - 2 * PAD);
}

function el(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export function renderTimeline(
  container: HTMLElement,
  vm: TimelineViewModel,
  onSelect: (date: string) => void,
): void {
  container.replaceChildren();
  if (vm.empty) {
    const message = document.createElement("p");
    message.className = "empty-state";
    message.textContent = "No scored windows for this selection.";
    container.append(message);
    return;
  }

  const svg = el("svg", { viewBox: `0 0 ${WIDTH} ${HEIGHT}`, class: "timeline" });

  if (vm.preEvent) {
    svg.append(el("rect", {
      x: sx(vm.preEvent.fromX), y: PAD,
      width: sx(vm.preEvent.toX) - sx(vm.preEvent.fromX),
      height: HEIGHT - 2 * PAD, class: "pre-event",
    }));
  }

  for (const gridY of [0, 0.2, 0.5, 1.0]) {
    svg.append(el("line", { x1: PAD, y1: sy(gridY), x2: WIDTH - PAD, y2: sy(gridY),
                            class: "grid" }));
    const label = el("text", { x: 2, y: sy(gridY) + 4, class: "grid-label" });
    label.textContent = String(gridY);
    svg.append(label);
  }

  const path = vm.points
    .map((p, i) => `${i === 0 ? "M" : "L"}${sx(p.x).toFixed(1)},${sy(p.y).toFixed(1)}`)
    .join(" ");
  svg.append(el("path", { d: path, class: "risk-line" }));

  svg.append(el("line", {
    x1: PAD, y1: sy(vm.thresholdY), x2: WIDTH - PAD, y2: sy(vm.thresholdY),
    class: "threshold-line",
  }));

  for (const point of vm.points) {
    const dot = el("circle", {
      cx: sx(point.x), cy: sy(point.y), r: point.highlighted ? 5 : 2.5,
      class: point.suspicious ? "dot suspicious"
        : point.highlighted ? "dot highlighted" : "dot",
      "data-date": point.date,
    });
    const tooltip = el("title", {});
    tooltip.textContent = `${point.date}: ${point.risk}`;
    dot.append(tooltip);
    dot.addEventListener("click", () => onSelect(point.date));
    svg.append(dot);
  }

  container.append(svg);
}
