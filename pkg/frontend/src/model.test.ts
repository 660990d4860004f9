import { describe, expect, it } from "vitest";

import {
  drilldownViewModel,
  filterWindows,
  firedConditions,
  highlightedDays,
  renderValue,
  timelineViewModel,
  triageOrder,
} from "./model.js";
import type { ApiConfig, ScoredWindow, ViewState, WindowDetail } from "./types.js";

function window(overrides: Partial<ScoredWindow>): ScoredWindow {
  return {
    ticker: "GME",
    date: "2021-01-04",
    social_volume: 10,
    avg_sentiment: 0.1,
    unique_authors: 5,
    avg_bot_score: 0.1,
    bot_heavy_post_ratio: 0.05,
    coordination_score: 0.02,
    open: 10, high: 11, low: 9, close: 10, adj_close: 10, volume: 1000,
    return: 0.0,
    volume_mean: 1000, volume_std: 0, volume_zscore: 0,
    is_volume_anomaly: false,
    s_vol: 0.1, s_sent: 0.2, s_bot: 0.1, s_coord: 0.05, s_mkt: 0.0,
    risk_score: 0.1,
    risk_level: "Low",
    is_suspicious: false,
    ...overrides,
  };
}

const config: ApiConfig = {
  model_version: "test",
  weights: { vol: 0.25, sent: 0.15, bot: 0.2, coord: 0.2, mkt: 0.2 },
  thresholds: { operating: 0.5, alert: 0.55 },
  suspicion: { volume_zscore: 2.0, abs_return: 0.05, coordination: 0.5, bot_ratio: 0.3 },
};

const view: ViewState = {
  ticker: "GME", from: null, to: null, threshold: 0.5,
  minLevel: "Low", selectedDay: null,
};

describe("renderValue", () => {
  it("round-trips served numbers exactly", () => {
    const served = 0.5123456789012345;
    expect(Number(renderValue(served))).toBe(served);
    expect(renderValue(served)).toBe(String(served));
  });
});

describe("filterWindows", () => {
  const rows = [
    window({ date: "2021-01-06", risk_level: "High", risk_score: 0.7 }),
    window({ date: "2021-01-04", risk_level: "Low", risk_score: 0.1 }),
    window({ date: "2021-01-05", risk_level: "Medium", risk_score: 0.3 }),
  ];

  it("sorts by date and applies the level floor", () => {
    const out = filterWindows(rows, { ...view, minLevel: "Medium" });
    expect(out.map((w) => w.date)).toEqual(["2021-01-05", "2021-01-06"]);
  });

  it("applies the date range", () => {
    const out = filterWindows(rows, { ...view, from: "2021-01-05", to: "2021-01-05" });
    expect(out.map((w) => w.date)).toEqual(["2021-01-05"]);
  });
});

describe("threshold highlighting", () => {
  const rows = [0.1, 0.4, 0.55, 0.6, 0.9].map((risk, i) =>
    window({ date: `2021-02-0${i + 1}`, risk_score: risk }));

  it("is inclusive at the threshold and monotone as the slider relaxes", () => {
    expect(highlightedDays(rows, 0.55).length).toBe(3);
    expect(highlightedDays(rows, 0.2).length).toBe(4);
    const counts = [0.9, 0.6, 0.4, 0.1].map((t) => highlightedDays(rows, t).length);
    expect(counts).toEqual([...counts].sort((a, b) => a - b));
  });

  it("never mutates or recomputes served scores", () => {
    const out = highlightedDays(rows, 0.55);
    for (const w of out) {
      expect(rows.map((r) => r.risk_score)).toContain(w.risk_score);
    }
  });
});

describe("triageOrder", () => {
  it("keeps only suspicious windows, sorted by descending risk", () => {
    const rows = [
      window({ date: "2021-01-04", risk_score: 0.6, is_suspicious: true }),
      window({ date: "2021-01-05", risk_score: 0.9, is_suspicious: true }),
      window({ date: "2021-01-06", risk_score: 0.95, is_suspicious: false }),
    ];
    expect(triageOrder(rows).map((w) => w.risk_score)).toEqual([0.9, 0.6]);
  });
});

describe("timelineViewModel", () => {
  it("flags the empty state", () => {
    expect(timelineViewModel([], 0.5).empty).toBe(true);
  });

  it("carries served risk values verbatim into points", () => {
    const rows = [window({ date: "2021-01-04", risk_score: 0.123456789 }),
                  window({ date: "2021-01-05", risk_score: 0.711111111 })];
    const vm = timelineViewModel(rows, 0.5);
    expect(vm.points.map((p) => p.risk)).toEqual([0.123456789, 0.711111111]);
    expect(vm.points[1].highlighted).toBe(true);
    expect(vm.points[0].highlighted).toBe(false);
  });

  it("shades the pre-event region from lead-time data", () => {
    const rows = ["2021-01-04", "2021-01-05", "2021-01-06", "2021-01-07"].map(
      (date) => window({ date }));
    const vm = timelineViewModel(rows, 0.5, [{
      ticker: "GME", event_id: "e", event_start_date: "2021-01-07",
      first_alert_date: "2021-01-05", lead_time_days: "2",
      detected_pre_event: "True", max_risk_pre_event: "0.7",
    }]);
    expect(vm.preEvent).not.toBeNull();
    expect(vm.preEvent!.fromX).toBeCloseTo(1 / 3);
    expect(vm.preEvent!.toX).toBe(1);
  });
});

describe("drilldown", () => {
  const suspicious = window({
    date: "2021-01-25", risk_score: 0.63, risk_level: "High",
    is_suspicious: true, volume_zscore: 3.8, return: 0.21,
    coordination_score: 0.07, bot_heavy_post_ratio: 0.21,
  });

  it("lists every fired anomaly condition for a suspicious day", () => {
    const fired = firedConditions(suspicious, config);
    expect(fired.length).toBe(2);
    expect(fired[0]).toContain("volume z-score 3.8");
    expect(fired[1]).toContain("return 0.21");
  });

  it("builds rationale only for suspicious days", () => {
    const detail: WindowDetail = { window: suspicious, config };
    const vm = drilldownViewModel(detail);
    expect(vm.rationale.length).toBe(2);
    const calm: WindowDetail = {
      window: window({ risk_level: "Low", is_suspicious: false }),
      config,
    };
    expect(drilldownViewModel(calm).rationale).toEqual([]);
  });

  it("shows served component scores verbatim with their weights", () => {
    const detail: WindowDetail = {
      window: window({ s_vol: 0.987654321, s_mkt: 0.111111 }), config,
    };
    const vm = drilldownViewModel(detail);
    const byName = Object.fromEntries(vm.components.map((c) => [c.name, c]));
    expect(byName.s_vol.score).toBe(0.987654321);
    expect(byName.s_vol.weight).toBe(0.25);
    expect(byName.s_mkt.score).toBe(0.111111);
    expect(vm.riskScore).toBe(String(detail.window.risk_score));
  });
});
