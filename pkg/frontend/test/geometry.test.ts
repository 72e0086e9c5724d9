import { describe, expect, it } from "vitest";

import { Camera, creaseDash, norm, project, rotate, Vec3, wrapAngle } from "../src/geometry.js";

const cam: Camera = { yaw: 0.6, pitch: 0.4, scale: 100 };

describe("geometry", () => {
  it("rotation preserves norms", () => {
    const vs: Vec3[] = [
      [1, 0, 0],
      [0.3, -0.8, 0.52],
      [0, 0, 1],
    ];
    for (const v of vs) {
      expect(norm(rotate(v, cam))).toBeCloseTo(norm(v), 12);
    }
  });

  it("projects the origin to the canvas centre", () => {
    const p = project([0, 0, 0], cam, 210, 210);
    expect(p.sx).toBe(210);
    expect(p.sy).toBe(210);
  });

  it("projection stays inside the sphere silhouette", () => {
    const p = project([0.6, -0.4, 0.69], cam, 0, 0);
    expect(Math.hypot(p.sx, p.sy)).toBeLessThanOrEqual(cam.scale + 1e-9);
  });

  it("mountain creases are solid, valley creases dashed", () => {
    expect(creaseDash(0.7)).toEqual([]);
    expect(creaseDash(0)).toEqual([]);
    expect(creaseDash(-0.7).length).toBeGreaterThan(0);
  });

  it("wrapAngle lands in (-pi, pi]", () => {
    expect(wrapAngle(Math.PI)).toBeCloseTo(Math.PI, 12);
    expect(wrapAngle(-Math.PI)).toBeCloseTo(Math.PI, 12);
    expect(wrapAngle(3 * Math.PI + 0.1)).toBeCloseTo(-Math.PI + 0.1, 12);
  });
});
