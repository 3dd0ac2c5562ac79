import type { BellTarget, GraphDocument, SessionView, StepRequest } from "./types.js";

/** Service-side rejection (4xx/5xx) with the reported detail message. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

/** Thin typed client for the session service; all graph math stays remote. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  createSession(graph: GraphDocument): Promise<SessionView> {
    return this.request("/sessions", "POST", { graph });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request(`/sessions/${id}`, "GET");
  }

  step(id: string, step: StepRequest): Promise<SessionView> {
    return this.request(`/sessions/${id}/step`, "POST", step);
  }

  setTarget(id: string, target: BellTarget | null): Promise<SessionView> {
    return this.request(`/sessions/${id}/target`, "POST", target ?? {});
  }

  async deleteSession(id: string): Promise<void> {
    await this.request(`/sessions/${id}`, "DELETE");
  }

  private async request(path: string, method: string, body?: unknown): Promise<SessionView> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 204) {
      return undefined as unknown as SessionView;
    }
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof payload?.detail === "string" ? payload.detail : `HTTP ${response.status}`;
      throw new ApiError(response.status, detail);
    }
    return payload as SessionView;
  }
}
