/** Published reference numbers shown as overlay markers on the chart.
 *
 * These are display-only annotations; live curves always come from the
 * service.  The first five rows mirror /api/presets; the 4096-patch grid is
 * a client-side extra whose distances are pinned via forced-distance
 * estimate queries.
 */

export interface Overlay {
  name: string;
  volume: number;
  patches: number; // data + ancilla, as the service's `patches` parameter
  routing: number;
  refQcWithout: number;
  refQcWith: number;
  refImprovement: number;
  refDWithout: number;
  refDWith: number;
  /** Set when the service solver would not land on the published distances. */
  forceDistances?: { d_wo: number; d_with: number };
}

export const OVERLAYS: Overlay[] = [
  {
    name: "Q100",
    volume: 1.31e11,
    patches: 150,
    routing: 0.5,
    refQcWithout: 252300,
    refQcWith: 204800,
    refImprovement: 0.81,
    refDWithout: 29,
    refDWith: 31,
  },
  {
    name: "Chem 54",
    volume: 4.59e9,
    patches: 185,
    routing: 0.5,
    refQcWithout: 195730,
    refQcWith: 167648,
    refImprovement: 0.86,
    refDWithout: 23,
    refDWith: 25,
  },
  {
    name: "Chem 250",
    volume: 7.56e11,
    patches: 512,
    routing: 0.5,
    refQcWithout: 861184,
    refQcWith: 700416,
    refImprovement: 0.81,
    refDWithout: 29,
    refDWith: 31,
  },
  {
    name: "Shor 1024",
    volume: 3.27e14,
    patches: 4623,
    routing: 0.5,
    refQcWithout: 8885406,
    refQcWith: 7988544,
    refImprovement: 0.9,
    refDWithout: 31,
    refDWith: 35,
  },
  {
    name: "Shor 4096",
    volume: 8.37e16,
    patches: 18447,
    routing: 0.5,
    refQcWithout: 45195150,
    refQcWith: 39353600,
    refImprovement: 0.87,
    refDWithout: 35,
    refDWith: 39,
  },
  {
    name: "Grid 4096",
    volume: 5e10,
    patches: 6144,
    routing: 0.5,
    refQcWithout: 6500352,
    refQcWith: 5537792,
    refImprovement: 0.85,
    refDWithout: 23,
    refDWith: 25,
    forceDistances: { d_wo: 23, d_with: 25 },
  },
];

export function overlayNames(): string[] {
  return OVERLAYS.map((o) => o.name);
}
