/** Service client: query building, debounced sweeps, stale-response discard.
 *
 * Fetches are serialized by a monotonically increasing sequence number; a
 * response is delivered only if no newer request has been issued since, so
 * parameter changes during an in-flight fetch never render out of order.
 */

import type { ServicePreset, SweepParams, SweepResponse, TradeoffPoint } from "./types.js";

export type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export const DEBOUNCE_MS = 150;

export function sweepQuery(base: string, params: SweepParams): string {
  const q = new URLSearchParams({
    volume: String(params.volume),
    patches: String(params.patches),
    routing: String(params.routing),
    p: String(params.p),
    epsilon: String(params.epsilon),
    scale_min: String(params.scale_min),
    scale_max: String(params.scale_max),
    steps: String(params.steps),
  });
  return `${base}/api/sweep?${q.toString()}`;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(url: string): Promise<T> {
    const response = await this.fetchFn(url);
    if (!response.ok) {
      throw new Error(`service returned ${response.status}`);
    }
    return (await response.json()) as T;
  }

  getSweep(params: SweepParams): Promise<SweepResponse> {
    return this.get<SweepResponse>(sweepQuery(this.base, params));
  }

  getPresets(): Promise<ServicePreset[]> {
    return this.get<ServicePreset[]>(`${this.base}/api/presets`);
  }

  getEstimate(
    params: Omit<SweepParams, "scale_min" | "scale_max" | "steps">,
    force?: { d_wo: number; d_with: number },
  ): Promise<TradeoffPoint> {
    const q = new URLSearchParams({
      volume: String(params.volume),
      patches: String(params.patches),
      routing: String(params.routing),
      p: String(params.p),
      epsilon: String(params.epsilon),
    });
    if (force) {
      q.set("force_d_wo", String(force.d_wo));
      q.set("force_d_with", String(force.d_with));
    }
    return this.get<TradeoffPoint>(`${this.base}/api/estimate?${q.toString()}`);
  }
}

export interface SweepDelivery {
  onSeries: (series: SweepResponse) => void;
  onError: (message: string) => void;
}

/** Debounces parameter changes and drops responses overtaken by newer requests. */
export class SweepFetcher {
  private sequence = 0;
  private delivered = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly delivery: SweepDelivery,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  /** Schedule a fetch for ``params``, replacing any pending one. */
  request(params: SweepParams): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire({ ...params });
    }, this.debounceMs);
  }

  /** Fetch immediately (initial load, preset selection). */
  fire(params: SweepParams): Promise<void> {
    const seq = ++this.sequence;
    return this.client
      .getSweep(params)
      .then((series) => {
        if (seq <= this.delivered) return; // a newer response already landed
        if (seq < this.sequence) return; // superseded while in flight
        this.delivered = seq;
        this.delivery.onSeries(series);
      })
      .catch((err: unknown) => {
        if (seq < this.sequence) return;
        this.delivery.onError(err instanceof Error ? err.message : String(err));
      });
  }
}
