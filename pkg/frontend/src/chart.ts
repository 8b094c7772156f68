/** SVG chart: red/green qubit-count step curves with orange bin boundaries.
 *
 * Rendered as an SVG string so the drawing logic is testable without a DOM.
 * X is the volume multiplier on a log axis; Y is the physical qubit count on
 * a log axis.  The without-bus curve is drawn step-wise (flat between
 * distance-bin boundaries); each vertex carries a <title> tooltip with
 * (scale, distance, qubits).
 */

import type { SweepResponse } from "./types.js";
import type { Overlay } from "./presets.js";

export interface ChartOptions {
  width?: number;
  height?: number;
  overlay?: Overlay | null;
  showBusSeries?: boolean;
}

const MARGIN = { top: 16, right: 24, bottom: 34, left: 74 };

export const COLORS = {
  without: "#d62728", // red
  withBus: "#2ca02c", // green
  boundary: "#ff9f1c", // orange
  overlay: "#555555",
} as const;

interface Scale {
  (value: number): number;
}

function logScale(domainMin: number, domainMax: number, rangeMin: number, rangeMax: number): Scale {
  const lo = Math.log10(domainMin);
  const hi = Math.log10(domainMax);
  const span = hi === lo ? 1 : hi - lo;
  return (v) => rangeMin + ((Math.log10(v) - lo) / span) * (rangeMax - rangeMin);
}

function fmt(value: number): string {
  return Number(value.toPrecision(4)).toString();
}

/** Step-after path: flat at each point's value until the next sample. */
function stepPath(xs: number[], ys: number[]): string {
  const parts: string[] = [`M ${xs[0].toFixed(2)} ${ys[0].toFixed(2)}`];
  for (let i = 1; i < xs.length; i++) {
    parts.push(`H ${xs[i].toFixed(2)}`);
    parts.push(`V ${ys[i].toFixed(2)}`);
  }
  return parts.join(" ");
}

export function renderChart(series: SweepResponse | null, options: ChartOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 420;
  const open = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" role="img">`;
  if (!series || series.points.length === 0) {
    return (
      `${open}<text class="placeholder" x="${width / 2}" y="${height / 2}" ` +
      `text-anchor="middle">no data yet — adjust a parameter or pick a preset</text></svg>`
    );
  }
  const points = series.points;
  const x0 = MARGIN.left;
  const x1 = width - MARGIN.right;
  const y0 = height - MARGIN.bottom;
  const y1 = MARGIN.top;
  const showBus = options.showBusSeries ?? true;

  const scaleMin = points[0].scale;
  const scaleMax = points[points.length - 1].scale;
  const qcValues = points.flatMap((p) => (showBus ? [p.qc_wo, p.qc_with] : [p.qc_wo]));
  if (options.overlay) {
    qcValues.push(options.overlay.refQcWithout, options.overlay.refQcWith);
  }
  const qcMin = Math.min(...qcValues);
  const qcMax = Math.max(...qcValues);
  const x = logScale(scaleMin, scaleMax, x0, x1);
  const y = logScale(qcMin / 1.15, qcMax * 1.15, y0, y1);

  const parts: string[] = [open];
  parts.push(`<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="#ccc"/>`);

  for (const boundary of series.boundaries) {
    if (boundary.scale < scaleMin || boundary.scale > scaleMax) continue;
    const bx = x(boundary.scale).toFixed(2);
    parts.push(
      `<line class="boundary" x1="${bx}" y1="${y1}" x2="${bx}" y2="${y0}" ` +
        `stroke="${COLORS.boundary}" stroke-dasharray="4 3">` +
        `<title>distance ${boundary.d} → ${boundary.d + 2} at ×${fmt(boundary.scale)}</title></line>`,
    );
  }

  const xs = points.map((p) => x(p.scale));
  parts.push(
    `<path class="series-without" d="${stepPath(xs, points.map((p) => y(p.qc_wo)))}" ` +
      `fill="none" stroke="${COLORS.without}" stroke-width="2"/>`,
  );
  if (showBus) {
    parts.push(
      `<path class="series-with" d="${stepPath(xs, points.map((p) => y(p.qc_with)))}" ` +
        `fill="none" stroke="${COLORS.withBus}" stroke-width="2"/>`,
    );
  }

  points.forEach((p, i) => {
    parts.push(
      `<circle class="pt-without" cx="${xs[i].toFixed(2)}" cy="${y(p.qc_wo).toFixed(2)}" r="3" ` +
        `fill="${COLORS.without}"><title>scale ×${fmt(p.scale)}, d=${p.d_wo}, ${p.qc_wo} qubits</title></circle>`,
    );
    if (showBus) {
      parts.push(
        `<circle class="pt-with" cx="${xs[i].toFixed(2)}" cy="${y(p.qc_with).toFixed(2)}" r="3" ` +
          `fill="${COLORS.withBus}"><title>scale ×${fmt(p.scale)}, d=${p.d_with}, ${p.qc_with} qubits</title></circle>`,
      );
    }
  });

  if (options.overlay) {
    const o = options.overlay;
    for (const [qc, label] of [
      [o.refQcWithout, `${o.name} reference without bus: ${o.refQcWithout}`],
      [o.refQcWith, `${o.name} reference with bus: ${o.refQcWith}`],
    ] as Array<[number, string]>) {
      const oy = y(qc).toFixed(2);
      parts.push(
        `<line class="overlay" x1="${x0}" y1="${oy}" x2="${x1}" y2="${oy}" ` +
          `stroke="${COLORS.overlay}" stroke-dasharray="2 4"><title>${label}</title></line>`,
      );
    }
    parts.push(
      `<text class="overlay-label" x="${x1 - 4}" y="${y1 + 12}" text-anchor="end" fill="${COLORS.overlay}">` +
        `${o.name}: improvement ${o.refImprovement.toFixed(2)}</text>`,
    );
  }

  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${height - 8}" text-anchor="middle">volume multiplier</text>`,
    `<text x="14" y="${(y0 + y1) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(y0 + y1) / 2})">physical qubits</text>`,
  );
  parts.push("</svg>");
  return parts.join("");
}
