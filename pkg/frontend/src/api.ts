// Thin typed client over the session service. Every method resolves to
// the full authoritative state, never a delta.

import type { ServerState, VariableRow } from "./state.js";

export class ApiError extends Error {
  status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  private base: string;
  private fetchImpl: FetchLike;

  constructor(base: string, fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? globalThis.fetch;
  }

  private async call<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof body === "object" && body !== null && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : `request failed with status ${response.status}`;
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.call(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createSession(payload: unknown): Promise<{ id: string; state: ServerState }> {
    return this.post("/session", payload);
  }

  getState(id: string): Promise<ServerState> {
    return this.call(`/session/${id}`);
  }

  mutate(id: string, k: number): Promise<ServerState> {
    return this.post(`/session/${id}/mutate`, { k });
  }

  undo(id: string): Promise<ServerState> {
    return this.post(`/session/${id}/undo`, {});
  }

  variables(id: string): Promise<{ variables: VariableRow[] }> {
    return this.call(`/session/${id}/variables`);
  }
}
