/** Wire types for the read-only risk API. */

export type RiskLevel = "Low" | "Medium" | "High";

/** One scored ticker-day exactly as served (column names match the store). */
export interface ScoredWindow {
  ticker: string;
  date: string;
  social_volume: number;
  avg_sentiment: number;
  unique_authors: number;
  avg_bot_score: number;
  bot_heavy_post_ratio: number;
  coordination_score: number;
  open: number;
  high: number;
  low: number;
  close: number;
  adj_close: number;
  volume: number;
  return: number;
  volume_mean: number;
  volume_std: number;
  volume_zscore: number;
  is_volume_anomaly: boolean;
  s_vol: number;
  s_sent: number;
  s_bot: number;
  s_coord: number;
  s_mkt: number;
  risk_score: number;
  risk_level: RiskLevel;
  is_suspicious: boolean;
}

export interface WindowsResponse {
  ticker: string;
  count: number;
  windows: ScoredWindow[];
}

export interface SuspicionConfig {
  volume_zscore: number;
  abs_return: number;
  coordination: number;
  bot_ratio: number;
}

export interface ApiConfig {
  model_version: string;
  weights: { vol: number; sent: number; bot: number; coord: number; mkt: number };
  thresholds: { operating: number; alert: number };
  suspicion: SuspicionConfig;
}

export interface WindowDetail {
  window: ScoredWindow;
  config: ApiConfig;
}

export interface Post {
  post_id: string;
  ticker: string;
  timestamp: string;
  author_id: string;
  subreddit: string;
  text: string;
  lexicon_sentiment: number | null;
  aux_sentiment: number | null;
}

export interface PostsResponse {
  ticker: string;
  date: string;
  count: number;
  posts: Post[];
}

export interface LeadTimeRecord {
  ticker: string;
  event_id: string;
  event_start_date: string;
  first_alert_date: string;
  lead_time_days: string;
  detected_pre_event: string;
  max_risk_pre_event: string;
}

export interface TickersResponse {
  tickers: string[];
  scored: string[];
}

/** Client-local view state; everything here filters served data only. */
export interface ViewState {
  ticker: string;
  from: string | null;
  to: string | null;
  threshold: number;
  minLevel: RiskLevel;
  selectedDay: string | null;
}
