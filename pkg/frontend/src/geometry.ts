// Small 3D camera + projection helpers for the sphere view.  The linkage
// geometry itself (crease vectors, arc tessellations) comes verbatim from
// the service; this module only orients and projects it.

export type Vec3 = [number, number, number];

export interface Camera {
  yaw: number; // rotation about the vertical axis
  pitch: number; // tilt toward the viewer
  scale: number; // pixels per unit-sphere radius
}

export function rotate(v: Vec3, cam: Camera): Vec3 {
  const [x, y, z] = v;
  const cy = Math.cos(cam.yaw);
  const sy = Math.sin(cam.yaw);
  // yaw about z (the vertex axis), then pitch about the screen-x axis
  const x1 = cy * x - sy * y;
  const y1 = sy * x + cy * y;
  const cp = Math.cos(cam.pitch);
  const sp = Math.sin(cam.pitch);
  const y2 = cp * y1 - sp * z;
  const z2 = sp * y1 + cp * z;
  return [x1, y2, z2];
}

export interface Projected {
  sx: number;
  sy: number;
  depth: number; // positive toward the viewer
}

export function project(v: Vec3, cam: Camera, cx: number, cy: number): Projected {
  const [x, y, z] = rotate(v, cam);
  return { sx: cx + cam.scale * x, sy: cy - cam.scale * z, depth: y };
}

export function norm(v: Vec3): number {
  return Math.hypot(v[0], v[1], v[2]);
}

/** Mountain creases (positive fold angle) draw solid, valley creases dashed. */
export function creaseDash(foldAngle: number): number[] {
  return foldAngle >= 0 ? [] : [6, 5];
}

/** Wrap a fold angle into (-pi, pi] (used when stepping angles for display). */
export function wrapAngle(rho: number): number {
  let r = rho % (2 * Math.PI);
  if (r > Math.PI) r -= 2 * Math.PI;
  if (r <= -Math.PI) r += 2 * Math.PI;
  return r;
}
