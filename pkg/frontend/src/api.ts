/** Thin fetch client. One call per data need; nothing here recomputes scores. */

import type {
  LeadTimeRecord,
  PostsResponse,
  TickersResponse,
  WindowDetail,
  WindowsResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        detail = (await response.json()).detail ?? detail;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  tickers(): Promise<TickersResponse> {
    return this.get("/api/tickers");
  }

  /** Full scored series for one ticker; filtering happens client-side. */
  windows(ticker: string): Promise<WindowsResponse> {
    return this.get(`/api/windows?ticker=${encodeURIComponent(ticker)}`);
  }

  windowDetail(ticker: string, date: string): Promise<WindowDetail> {
    return this.get(`/api/windows/${encodeURIComponent(ticker)}/${date}`);
  }

  posts(ticker: string, date: string): Promise<PostsResponse> {
    return this.get(`/api/posts/${encodeURIComponent(ticker)}/${date}`);
  }

  async leadtime(ticker: string): Promise<LeadTimeRecord[]> {
    const payload = await this.get<{ ticker: string; records: LeadTimeRecord[] }>(
      `/api/leadtime/${encodeURIComponent(ticker)}`,
    );
    return payload.records;
  }
}
