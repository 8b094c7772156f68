/** DOM wiring for the explorer page: controls, fetch plumbing, chart mount. */

import { ApiClient, SweepFetcher } from "./api.js";
import { renderChart } from "./chart.js";
import { overlayNames } from "./presets.js";
import { ExplorerState, sliderToVolume, volumeToSlider } from "./state.js";
import type { SweepParams } from "./types.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function seriesToCsv(state: ExplorerState): string {
  const snap = state.snapshot();
  if (!snap.series) return "";
  const cols = [
    "scale", "d_wo", "d_with", "qc_wo", "qc_with",
    "improvement", "hours_wo", "hours_with", "safety_wo", "safety_with",
  ] as const;
  const rows = snap.series.points.map((p) => cols.map((c) => String(p[c])).join(","));
  return [cols.join(","), ...rows].join("\n") + "\n";
}

function main(): void {
  const state = new ExplorerState();
  const client = new ApiClient("");
  const fetcher = new SweepFetcher(client, {
    onSeries: (series) => state.acceptSeries(series),
    onError: (message) => state.reportFetchError(`service unreachable: ${message}`),
  });

  const chartHost = byId<HTMLDivElement>("chart");
  const banner = byId<HTMLDivElement>("banner");
  const volumeSlider = byId<HTMLInputElement>("volume");
  const volumeLabel = byId<HTMLSpanElement>("volume-label");
  const patches = byId<HTMLInputElement>("patches");
  const routing = byId<HTMLInputElement>("routing");
  const routingLabel = byId<HTMLSpanElement>("routing-label");
  const pPhys = byId<HTMLInputElement>("p-phys");
  const epsilon = byId<HTMLInputElement>("epsilon");
  const steps = byId<HTMLInputElement>("steps");
  const presetSelect = byId<HTMLSelectElement>("preset");
  const busToggle = byId<HTMLInputElement>("bus-toggle");
  const download = byId<HTMLAnchorElement>("download-csv");

  for (const name of overlayNames()) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.appendChild(option);
  }

  state.onChange((snap) => {
    banner.hidden = snap.banner === null;
    banner.textContent = snap.banner ?? "";
    volumeLabel.textContent = snap.params.volume.toExponential(2);
    routingLabel.textContent = snap.params.routing.toFixed(2);
    chartHost.innerHTML = renderChart(snap.series, {
      overlay: snap.overlay,
      showBusSeries: snap.busComparison,
    });
  });

  const requestSweep = (immediate = false): void => {
    const params: SweepParams = state.snapshot().params;
    if (immediate) void fetcher.fire(params);
    else fetcher.request(params);
  };

  volumeSlider.addEventListener("input", () => {
    state.setParam("volume", sliderToVolume(Number(volumeSlider.value)));
    requestSweep();
  });
  routing.addEventListener("input", () => {
    state.setParam("routing", Number(routing.value));
    requestSweep();
  });
  for (const [input, key] of [
    [patches, "patches"],
    [pPhys, "p"],
    [epsilon, "epsilon"],
    [steps, "steps"],
  ] as Array<[HTMLInputElement, "patches" | "p" | "epsilon" | "steps"]>) {
    input.addEventListener("change", () => {
      const value = Number(input.value);
      if (!Number.isFinite(value)) return; // blocked client-side
      state.setParam(key, value);
      input.value = String(state.snapshot().params[key]);
      requestSweep();
    });
  }
  presetSelect.addEventListener("change", () => {
    if (!presetSelect.value) return;
    state.applyPreset(presetSelect.value);
    const snap = state.snapshot();
    volumeSlider.value = String(volumeToSlider(snap.params.volume));
    patches.value = String(snap.params.patches);
    routing.value = String(snap.params.routing);
    requestSweep(true);
  });
  busToggle.addEventListener("change", () => state.toggleBusComparison());
  download.addEventListener("click", () => {
    const blob = new Blob([seriesToCsv(state)], { type: "text/csv" });
    download.href = URL.createObjectURL(blob);
  });

  // initial render + load
  volumeSlider.value = String(volumeToSlider(state.snapshot().params.volume));
  patches.value = String(state.snapshot().params.patches);
  routing.value = String(state.snapshot().params.routing);
  pPhys.value = String(state.snapshot().params.p);
  epsilon.value = String(state.snapshot().params.epsilon);
  steps.value = String(state.snapshot().params.steps);
  chartHost.innerHTML = renderChart(null);
  requestSweep(true);
}

document.addEventListener("DOMContentLoaded", main);
