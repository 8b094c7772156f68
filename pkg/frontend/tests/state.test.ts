import { describe, expect, it, vi } from "vitest";

import { ExplorerState, LIMITS, clamp, sliderToVolume, volumeToSlider } from "../src/state.js";
import type { SweepResponse } from "../src/types.js";

const emptySeries: SweepResponse = { points: [], boundaries: [] };

describe("volume slider mapping", () => {
  it("is log-scaled across the limit range", () => {
    expect(sliderToVolume(0)).toBeCloseTo(LIMITS.volume.min);
    expect(sliderToVolume(1)).toBeCloseTo(LIMITS.volume.max);
    // halfway in slider space is the geometric mean, not the arithmetic one
    const mid = sliderToVolume(0.5);
    expect(mid).toBeCloseTo(Math.sqrt(LIMITS.volume.min * LIMITS.volume.max), 3);
  });

  it("round-trips", () => {
    for (const v of [1e9, 1.31e11, 3.27e14, 8.37e16]) {
      expect(sliderToVolume(volumeToSlider(v))).toBeCloseTo(v, -3);
    }
  });

  it("clamps out-of-range positions", () => {
    expect(sliderToVolume(-1)).toBeCloseTo(LIMITS.volume.min);
    expect(sliderToVolume(2)).toBeCloseTo(LIMITS.volume.max);
    expect(clamp(Number.NaN, 1, 2)).toBe(1);
  });
});

describe("parameter clamping", () => {
  it("keeps every parameter inside service-accepted ranges", () => {
    const state = new ExplorerState();
    state.setParam("routing", 1.7);
    expect(state.snapshot().params.routing).toBe(1);
    state.setParam("steps", 10_000);
    expect(state.snapshot().params.steps).toBe(500);
    state.setParam("steps", 0);
    expect(state.snapshot().params.steps).toBe(1);
    state.setParam("patches", 12.7);
    expect(state.snapshot().params.patches).toBe(13);
    state.setParam("p", 0.5);
    expect(state.snapshot().params.p).toBeLessThan(0.01);
  });

  it("keeps the sweep range ordered", () => {
    const state = new ExplorerState();
    state.setParam("scale_min", 50);
    expect(state.snapshot().params.scale_max).toBeGreaterThanOrEqual(50);
    state.setParam("scale_max", 0.01);
    expect(state.snapshot().params.scale_min).toBeLessThanOrEqual(0.01);
  });
});

describe("presets", () => {
  it("loads the Shor 1024 profile with its published overlay numbers", () => {
    const state = new ExplorerState();
    state.applyPreset("Shor 1024");
    const snap = state.snapshot();
    expect(snap.params.volume).toBe(3.27e14);
    expect(snap.params.patches).toBe(4623);
    expect(snap.overlay?.refQcWithout).toBe(8885406);
    expect(snap.overlay?.refQcWith).toBe(7988544);
  });

  it("exposes the Q100 improvement reference", () => {
    const state = new ExplorerState();
    state.applyPreset("Q100");
    expect(state.snapshot().overlay?.refImprovement).toBe(0.81);
  });

  it("pins forced distances for the grid preset only", () => {
    const state = new ExplorerState();
    state.applyPreset("Grid 4096");
    expect(state.snapshot().overlay?.forceDistances).toEqual({ d_wo: 23, d_with: 25 });
    state.applyPreset("Shor 4096");
    expect(state.snapshot().overlay?.forceDistances).toBeUndefined();
  });

  it("warns and leaves state untouched for unknown names", () => {
    const state = new ExplorerState();
    const before = state.snapshot().params;
    const warn = vi.fn();
    state.applyPreset("Nope 9000", warn);
    expect(warn).toHaveBeenCalledOnce();
    expect(state.snapshot().params).toEqual(before);
    expect(state.snapshot().preset).toBeNull();
  });

  it("drops preset selection on manual edits", () => {
    const state = new ExplorerState();
    state.applyPreset("Q100");
    state.setParam("patches", 151);
    expect(state.snapshot().preset).toBeNull();
  });
});

describe("fetch outcomes", () => {
  it("retains the last good series when a fetch fails", () => {
    const state = new ExplorerState();
    state.acceptSeries(emptySeries);
    state.reportFetchError("offline");
    const snap = state.snapshot();
    expect(snap.banner).toBe("offline");
    expect(snap.series).toBe(emptySeries);
  });

  it("clears the banner on the next good series", () => {
    const state = new ExplorerState();
    state.reportFetchError("offline");
    state.acceptSeries(emptySeries);
    expect(state.snapshot().banner).toBeNull();
  });

  it("notifies listeners on every change", () => {
    const state = new ExplorerState();
    const seen: Array<string | null> = [];
    state.onChange((snap) => seen.push(snap.banner));
    state.reportFetchError("x");
    state.acceptSeries(emptySeries);
    expect(seen).toEqual(["x", null]);
  });
});
