// Relation-curve plots: the y-vs-x and z-vs-x loci of each branch, drawn in
// fold-angle space so points at infinity sit on the +-pi frame instead of
// escaping the canvas.  Pure data transforms here; canvas work in main.ts.

import { BranchJson, Coord, SampleRow } from "./api.js";

export interface PlotPoint {
  px: number; // rho_x in (-pi, pi]
  py: number; // rho of the plotted coordinate
  atInfinity: boolean; // either coordinate flat-folded
}

export function rhoOf(value: Coord, rho: number): number {
  return value === "inf" ? Math.PI : rho;
}

/** Map one branch's samples to a polyline for the chosen coordinate. */
export function branchCurve(branch: BranchJson, coord: "y" | "z"): PlotPoint[] {
  return branch.samples.map((row: SampleRow) => ({
    px: row.rho_x,
    py: coord === "y" ? row.rho_y : row.rho_z,
    atInfinity: row.x === "inf" || row[coord] === "inf",
  }));
}

/**
 * Split a polyline where it jumps across the +-pi identification so the plot
 * does not draw spurious horizontal strokes.
 */
export function splitAtWrap(points: PlotPoint[], gap = Math.PI): PlotPoint[][] {
  const out: PlotPoint[][] = [];
  let current: PlotPoint[] = [];
  let prev: PlotPoint | null = null;
  for (const p of points) {
    if (prev && (Math.abs(p.px - prev.px) > gap || Math.abs(p.py - prev.py) > gap)) {
      if (current.length > 1) out.push(current);
      current = [];
    }
    current.push(p);
    prev = p;
  }
  if (current.length > 1) out.push(current);
  return out;
}

export interface InfinityMarker {
  px: number;
  py: number;
}

/** Isolated flat-fold points for the x-vs-coordinate plot. */
export function infinityMarkers(
  solutions: { x: Coord; y: Coord; z: Coord; w: Coord; isolated: boolean }[],
  coord: "y" | "z",
): InfinityMarker[] {
  return solutions
    .filter((s) => s.isolated)
    .map((s) => ({
      px: s.x === "inf" ? Math.PI : 2 * Math.atan(s.x as number),
      py: s[coord] === "inf" ? Math.PI : 2 * Math.atan(s[coord] as number),
    }));
}
