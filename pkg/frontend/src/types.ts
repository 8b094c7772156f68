/** Wire types mirroring the estimator service's JSON responses. */

export interface TradeoffPoint {
  scale: number;
  d_wo: number;
  d_with: number;
  qc_wo: number;
  qc_with: number;
  improvement: number;
  hours_wo: number;
  hours_with: number;
  safety_wo: number;
  safety_with: number;
  v_a: number;
  v_b: number;
}

export interface BinBoundary {
  /** Distance in force below the boundary; it jumps to d + 2 above. */
  d: number;
  scale: number;
}

export interface SweepResponse {
  points: TradeoffPoint[];
  boundaries: BinBoundary[];
}

export interface PresetRef {
  d_wo: number;
  d_with: number;
  qc_wo: number;
  qc_with: number;
  improvement: number;
  hours_wo: number | null;
}

export interface ServicePreset {
  name: string;
  q: number;
  a: number;
  volume: number;
  p_phys: number;
  epsilon: number;
  ref: PresetRef;
}

/** Query parameters accepted by /api/estimate and /api/sweep. */
export interface ProfileParams {
  volume: number;
  patches: number;
  routing: number;
  p: number;
  epsilon: number;
}

export interface SweepParams extends ProfileParams {
  scale_min: number;
  scale_max: number;
  steps: number;
}
