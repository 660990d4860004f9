/** App wiring: caches served windows per ticker, re-renders on view changes.
 *
 * Threshold and filter changes only re-derive view models from the cache;
 * the network is touched when the ticker changes or a day is drilled into.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  drilldownViewModel,
  filterWindows,
  highlightedDays,
  renderValue,
  timelineViewModel,
  triageOrder,
} from "./model.js";
import { renderDrilldown } from "./drilldown.js";
import { renderTimeline } from "./timeline.js";
import type { LeadTimeRecord, RiskLevel, ScoredWindow, ViewState } from "./types.js";

const api = new ApiClient();

const state: ViewState = {
  ticker: "",
  from: null,
  to: null,
  threshold: 0.55,
  minLevel: "Low",
  selectedDay: null,
};

let cachedWindows: ScoredWindow[] = [];
let cachedLeadtime: LeadTimeRecord[] = [];

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function renderAll(): void {
  const windows = filterWindows(cachedWindows, state);
  const highlighted = highlightedDays(windows, state.threshold);
  byId<HTMLSpanElement>("highlight-count").textContent =
    `${highlighted.length} of ${windows.length} days at or above threshold`;
  byId<HTMLSpanElement>("threshold-value").textContent = state.threshold.toFixed(2);

  renderTimeline(byId("timeline"), timelineViewModel(windows, state.threshold,
                                                     cachedLeadtime), selectDay);

  const tbody = byId<HTMLTableSectionElement>("suspicious-rows");
  tbody.replaceChildren();
  for (const w of triageOrder(windows)) {
    const row = document.createElement("tr");
    for (const cell of [w.date, renderValue(w.risk_score), w.risk_level,
                        renderValue(w.volume_zscore),
                        renderValue(w.coordination_score),
                        renderValue(w.bot_heavy_post_ratio)]) {
      const td = document.createElement("td");
      td.textContent = cell;
      row.append(td);
    }
    row.addEventListener("click", () => selectDay(w.date));
    tbody.append(row);
  }
}

async function selectDay(date: string): Promise<void> {
  state.selectedDay = date;
  const panel = byId("drilldown");
  try {
    const detail = await api.windowDetail(state.ticker, date);
    const posts = await api.posts(state.ticker, date);
    renderDrilldown(panel, drilldownViewModel(detail), posts.posts);
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      renderDrilldown(panel, null, [], true);
    } else {
      throw error;
    }
  }
}

async function loadTicker(ticker: string): Promise<void> {
  state.ticker = ticker;
  state.selectedDay = null;
  const response = await api.windows(ticker);
  cachedWindows = response.windows;
  try {
    cachedLeadtime = await api.leadtime(ticker);
  } catch {
    cachedLeadtime = []; // lead-time report not generated yet
  }
  renderDrilldown(byId("drilldown"), null, []);
  renderAll();
}

async function init(): Promise<void> {
  const tickers = await api.tickers();
  const select = byId<HTMLSelectElement>("ticker-select");
  for (const ticker of tickers.scored) {
    const option = document.createElement("option");
    option.value = ticker;
    option.textContent = ticker;
    select.append(option);
  }
  select.addEventListener("change", () => void loadTicker(select.value));

  const slider = byId<HTMLInputElement>("threshold-slider");
  slider.value = String(state.threshold);
  slider.addEventListener("input", () => {
    state.threshold = Number(slider.value);
    renderAll(); // cache only: no API call on threshold moves
  });

  byId<HTMLInputElement>("from-date").addEventListener("change", (event) => {
    state.from = (event.target as HTMLInputElement).value || null;
    renderAll();
  });
  byId<HTMLInputElement>("to-date").addEventListener("change", (event) => {
    state.to = (event.target as HTMLInputElement).value || null;
    renderAll();
  });
  byId<HTMLSelectElement>("level-select").addEventListener("change", (event) => {
    state.minLevel = (event.target as HTMLSelectElement).value as RiskLevel;
    renderAll();
  });

  const first = tickers.scored.includes("GME") ? "GME" : tickers.scored[0];
  if (first) {
    select.value = first;
    await loadTicker(first);
  }
}

void init();
