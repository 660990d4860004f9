/** Drill-down panel: component bars, suspicion rationale, linked posts. */

import type { DrilldownViewModel } from "./model.js";
import { renderValue } from "./model.js";
import type { Post } from "./types.js";

function div(className: string, text?: string): HTMLDivElement {
  const node = document.createElement("div");
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderDrilldown(
  container: HTMLElement,
  vm: DrilldownViewModel | null,
  posts: Post[],
  notFound = false,
): void {
  container.replaceChildren();
  if (notFound) {
    container.append(div("empty-state", "No scored window for that day."));
    return;
  }
  if (vm === null) {
    container.append(div("empty-state", "Select a day on the timeline."));
    return;
  }

  const header = div("drill-header");
  header.append(
    div("drill-title", `${vm.ticker} ${vm.date}`),
    div(`level level-${vm.riskLevel.toLowerCase()}`, vm.riskLevel),
    div("drill-score", `risk ${vm.riskScore}`),
  );
  if (vm.suspicious) header.append(div("flag", "SUSPICIOUS"));
  container.append(header);

  const bars = div("components");
  for (const component of vm.components) {
    const row = div("component-row");
    row.append(div("component-label", `${component.label} (w=${component.weight})`));
    const track = div("bar-track");
    const fill = div("bar-fill");
    fill.style.width = `${component.score * 100}%`;
    fill.dataset.score = renderValue(component.score);
    track.append(fill);
    row.append(track, div("component-value", renderValue(component.score)));
    bars.append(row);
  }
  container.append(bars);

  if (vm.rationale.length > 0) {
    const rationale = div("rationale");
    rationale.append(div("rationale-title", "why it was flagged"));
    const list = document.createElement("ul");
    for (const reason of vm.rationale) {
      const item = document.createElement("li");
      item.textContent = reason;
      list.append(item);
    }
    rationale.append(list);
    container.append(rationale);
  }

  const postsPanel = div("posts");
  postsPanel.append(div("posts-title", `linked posts (${posts.length})`));
  if (posts.length === 0) {
    postsPanel.append(div("empty-state", "No posts assigned to this trading day."));
  } else {
    for (const post of posts.slice(0, 50)) {
      const row = div("post-row");
      row.append(
        div("post-meta", `${post.author_id} · r/${post.subreddit} · `
          + `${post.timestamp} · sentiment ${renderValue(post.lexicon_sentiment)}`),
        div("post-text", post.text),
      );
      postsPanel.append(row);
    }
  }
  container.append(postsPanel);
}
