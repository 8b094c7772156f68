/** Explorer parameter state: clamping, log-scaled volume slider, presets.
 *
 * The state never computes estimator math itself; every displayed number
 * comes from the service (or, for overlays, from the published reference
 * constants bundled in presets.ts).
 */

import type { SweepParams, SweepResponse } from "./types.js";
import { OVERLAYS, type Overlay } from "./presets.js";

export const LIMITS = {
  volume: { min: 1, max: 1e18 },
  patches: { min: 1, max: 10_000_000 },
  routing: { min: 0, max: 1 },
  p: { min: 1e-6, max: 9.9e-3 },
  epsilon: { min: 1e-6, max: 0.5 },
  scale: { min: 1e-3, max: 1e3 },
  steps: { min: 1, max: 500 },
} as const;

/** Volume slider: position in [0, 1] maps exponentially over the limit range. */
export function sliderToVolume(position: number): number {
  const t = clamp(position, 0, 1);
  const lo = Math.log10(LIMITS.volume.min);
  const hi = Math.log10(LIMITS.volume.max);
  return Math.pow(10, lo + t * (hi - lo));
}

export function volumeToSlider(volume: number): number {
  const v = clamp(volume, LIMITS.volume.min, LIMITS.volume.max);
  const lo = Math.log10(LIMITS.volume.min);
  const hi = Math.log10(LIMITS.volume.max);
  return (Math.log10(v) - lo) / (hi - lo);
}

export function clamp(value: number, min: number, max: number): number {
  if (Number.isNaN(value)) return min;
  return Math.min(max, Math.max(min, value));
}

export interface ExplorerSnapshot {
  params: SweepParams;
  series: SweepResponse | null;
  preset: string | null;
  overlay: Overlay | null;
  busComparison: boolean;
  banner: string | null;
}

export class ExplorerState {
  private params: SweepParams = {
    volume: 1.31e11,
    patches: 150,
    routing: 0.5,
    p: 1e-3,
    epsilon: 1e-2,
    scale_min: 0.1,
    scale_max: 10,
    steps: 40,
  };
  private series: SweepResponse | null = null;
  private preset: string | null = null;
  private overlay: Overlay | null = null;
  private busComparison = true;
  private banner: string | null = null;
  private listeners: Array<(snap: ExplorerSnapshot) => void> = [];

  snapshot(): ExplorerSnapshot {
    return {
      params: { ...this.params },
      series: this.series,
      preset: this.preset,
      overlay: this.overlay,
      busComparison: this.busComparison,
      banner: this.banner,
    };
  }

  onChange(listener: (snap: ExplorerSnapshot) => void): void {
    this.listeners.push(listener);
  }

  /** Set one parameter, clamped into the service-accepted range. */
  setParam<K extends keyof SweepParams>(key: K, value: number): void {
    const clamped = this.clampParam(key, value);
    if (this.params[key] === clamped) return;
    this.params[key] = clamped;
    if (key === "scale_min" && this.params.scale_max < clamped) {
      this.params.scale_max = clamped;
    }
    if (key === "scale_max" && this.params.scale_min > clamped) {
      this.params.scale_min = clamped;
    }
    this.preset = null; // manual edits leave preset mode, overlay stays informative
    this.notify();
  }

  private clampParam(key: keyof SweepParams, value: number): number {
    switch (key) {
      case "volume":
        return clamp(value, LIMITS.volume.min, LIMITS.volume.max);
      case "patches":
        return Math.round(clamp(value, LIMITS.patches.min, LIMITS.patches.max));
      case "routing":
        return clamp(value, LIMITS.routing.min, LIMITS.routing.max);
      case "p":
        return clamp(value, LIMITS.p.min, LIMITS.p.max);
      case "epsilon":
        return clamp(value, LIMITS.epsilon.min, LIMITS.epsilon.max);
      case "scale_min":
      case "scale_max":
        return clamp(value, LIMITS.scale.min, LIMITS.scale.max);
      case "steps":
        return Math.round(clamp(value, LIMITS.steps.min, LIMITS.steps.max));
    }
  }

  /** Load a named preset's profile and reference overlay; unknown names warn and no-op. */
  applyPreset(name: string, warn: (msg: string) => void = console.warn): void {
    const overlay = OVERLAYS.find((o) => o.name === name);
    if (!overlay) {
      warn(`unknown preset ${name}`);
      return;
    }
    this.params.volume = overlay.volume;
    this.params.patches = overlay.patches;
    this.params.routing = overlay.routing;
    this.preset = name;
    this.overlay = overlay;
    this.notify();
  }

  acceptSeries(series: SweepResponse): void {
    this.series = series;
    this.banner = null;
    this.notify();
  }

  /** Fetch failure: show a banner, keep the last good series on screen. */
  reportFetchError(message: string): void {
    this.banner = message;
    this.notify();
  }

  toggleBusComparison(): void {
    this.busComparison = !this.busComparison;
    this.notify();
  }

  private notify(): void {
    const snap = this.snapshot();
    for (const listener of this.listeners) listener(snap);
  }
}
