/** Pure view-model logic.
 *
 * Invariants enforced here (and asserted by the tests):
 *  - every value shown comes verbatim from the API payloads; the only
 *    client-side operations are filtering, thresholding and sorting;
 *  - moving the threshold slider re-derives view models from cached
 *    windows and never needs another request.
 */

import type {
  ApiConfig,
  LeadTimeRecord,
  RiskLevel,
  ScoredWindow,
  ViewState,
  WindowDetail,
} from "./types.js";

const LEVEL_ORDER: Record<RiskLevel, number> = { Low: 0, Medium: 1, High: 2 };

/** Exact textual rendering of an API-served number (full JSON fidelity). */
export function renderValue(value: number | boolean | string | null): string {
  return value === null ? "" : String(value);
}

export function filterWindows(windows: ScoredWindow[], view: ViewState): ScoredWindow[] {
  return windows
    .filter((w) => view.from === null || w.date >= view.from)
    .filter((w) => view.to === null || w.date <= view.to)
    .filter((w) => LEVEL_ORDER[w.risk_level] >= LEVEL_ORDER[view.minLevel])
    .sort((a, b) => (a.date < b.date ? -1 : a.date > b.date ? 1 : 0));
}

export function highlightedDays(windows: ScoredWindow[], threshold: number): ScoredWindow[] {
  return windows.filter((w) => w.risk_score >= threshold);
}

/** Suspicious windows ordered by descending risk score (triage order). */
export function triageOrder(windows: ScoredWindow[]): ScoredWindow[] {
  return [...windows]
    .filter((w) => w.is_suspicious)
    .sort((a, b) => b.risk_score - a.risk_score);
}

export interface TimelinePoint {
  date: string;
  risk: number;
  highlighted: boolean;
  suspicious: boolean;
  x: number; // [0, 1] across the chart
  y: number; // [0, 1], 0 = bottom
}

export interface TimelineViewModel {
  points: TimelinePoint[];
  thresholdY: number;
  preEvent: { fromX: number; toX: number } | null;
  empty: boolean;
}

export function timelineViewModel(
  windows: ScoredWindow[],
  threshold: number,
  leadtime: LeadTimeRecord[] = [],
): TimelineViewModel {
  if (windows.length === 0) {
    return { points: [], thresholdY: threshold, preEvent: null, empty: true };
  }
  const n = windows.length;
  const points = windows.map((w, i) => ({
    date: w.date,
    risk: w.risk_score,
    highlighted: w.risk_score >= threshold,
    suspicious: w.is_suspicious,
    x: n === 1 ? 0.5 : i / (n - 1),
    y: w.risk_score,
  }));
  let preEvent: { fromX: number; toX: number } | null = null;
  const detected = leadtime.find(
    (r) => String(r.detected_pre_event) === "True" && r.first_alert_date,
  );
  if (detected) {
    const fromIdx = windows.findIndex((w) => w.date >= detected.first_alert_date);
    const toIdx = windows.findIndex((w) => w.date >= detected.event_start_date);
    if (fromIdx >= 0 && toIdx > fromIdx) {
      preEvent = { fromX: points[fromIdx].x, toX: points[toIdx].x };
    }
  }
  return { points, thresholdY: threshold, preEvent, empty: false };
}

export interface ComponentBar {
  name: string;
  label: string;
  score: number;
  weight: number;
  contribution: number; // weight * score, for the bar annotation only
}

/** Which supporting anomaly conditions fired, from served values + config. */
export function firedConditions(window: ScoredWindow, config: ApiConfig): string[] {
  const cuts = config.suspicion;
  const fired: string[] = [];
  if (window.volume_zscore >= cuts.volume_zscore) {
    fired.push(`volume z-score ${renderValue(window.volume_zscore)} >= ${cuts.volume_zscore}`);
  }
  if (Math.abs(window.return) > cuts.abs_return) {
    fired.push(`return ${renderValue(window.return)} exceeds ±${cuts.abs_return}`);
  }
  if (window.coordination_score >= cuts.coordination) {
    fired.push(
      `coordination ${renderValue(window.coordination_score)} >= ${cuts.coordination}`,
    );
  }
  if (window.bot_heavy_post_ratio >= cuts.bot_ratio) {
    fired.push(
      `bot-heavy ratio ${renderValue(window.bot_heavy_post_ratio)} >= ${cuts.bot_ratio}`,
    );
  }
  return fired;
}

export interface DrilldownViewModel {
  ticker: string;
  date: string;
  riskScore: string; // verbatim
  riskLevel: RiskLevel;
  suspicious: boolean;
  components: ComponentBar[];
  rationale: string[]; // empty unless the day is suspicious
}

export function drilldownViewModel(detail: WindowDetail): DrilldownViewModel {
  const w = detail.window;
  const weights = detail.config.weights;
  const components: ComponentBar[] = [
    { name: "s_vol", label: "social volume", score: w.s_vol, weight: weights.vol },
    { name: "s_sent", label: "sentiment", score: w.s_sent, weight: weights.sent },
    { name: "s_bot", label: "bot activity", score: w.s_bot, weight: weights.bot },
    { name: "s_coord", label: "coordination", score: w.s_coord, weight: weights.coord },
    { name: "s_mkt", label: "market anomaly", score: w.s_mkt, weight: weights.mkt },
  ].map((c) => ({ ...c, contribution: c.weight * c.score }));
  return {
    ticker: w.ticker,
    date: w.date,
    riskScore: renderValue(w.risk_score),
    riskLevel: w.risk_level,
    suspicious: w.is_suspicious,
    components,
    rationale: w.is_suspicious ? firedConditions(w, detail.config) : [],
  };
}
