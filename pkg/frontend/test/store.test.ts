import { describe, expect, it } from "vitest";

import {
  Api,
  AnglesDeg,
  ApiError,
  BranchDocument,
  BranchJson,
  ClassifyResponse,
  StateResponse,
} from "../src/api.js";
import { ExplorerStore, STATE_DEBOUNCE_MS } from "../src/store.js";

function row(s: number, selfIntersects = false): BranchJson["samples"][number] {
  return {
    s,
    x: s,
    y: 0,
    z: s,
    w: 0,
    rho_x: s,
    rho_y: 0,
    rho_z: s,
    rho_w: 0,
    u: 1,
    v: 1,
    self_intersects: selfIntersects,
    closure_residual: 1e-15,
  };
}

function branch(id: number, label: string, atInfinity = false): BranchJson {
  return {
    branch_id: id,
    kind: "RationalClosedForm",
    label,
    at_infinity: atInfinity,
    closure_at_infinity: true,
    s_domain: [-Math.PI, Math.PI],
    samples: [row(-1), row(0), row(1)],
  };
}

const squareDoc: BranchDocument = {
  schema_version: "1",
  vertex_type: "Square",
  orthodiagonal: false,
  branches: [
    branch(1, "fold along the x-z creases"),
    branch(2, "fold along the y-w creases"),
    branch(3, "flat y-w creases, x sweeping", true),
    branch(4, "flat x-z creases, y sweeping", true),
  ],
  infinity_solutions: [
    { x: 0, y: "inf", z: 0, w: "inf", isolated: false },
    { x: "inf", y: 0, z: "inf", w: 0, isolated: false },
  ],
};

const classifySquare: ClassifyResponse = {
  type: "Square",
  orthodiagonal: false,
  sigma: Math.PI,
  angles_rad: { alpha: 1.5708, beta: 1.5708, gamma: 1.5708, delta: 1.5708 },
  grashof: true,
  reachable_infinities: ["x", "y", "z", "w"],
};

function stateAt(s: number, selfIntersects = false): StateResponse {
  return {
    x: s,
    y: 0,
    z: s,
    w: 0,
    rho_x: s,
    rho_y: 0,
    rho_z: s,
    rho_w: 0,
    u: 1,
    v: 1,
    self_intersects: selfIntersects,
    closure_residual: 1e-15,
    crease_dirs: [
      [1, 0, 0],
      [0, 1, 0],
      [-1, 0, 0],
      [0, -1, 0],
    ],
    arcs: [[[1, 0, 0], [0, 1, 0]]],
  };
}

class FakeApi implements Api {
  stateCalls: { branchId: number; s: number }[] = [];
  selfIntersectsAlways = false;
  stateDelay: (() => Promise<void>) | null = null;
  branchesDelay: (() => Promise<void>) | null = null;
  doc: BranchDocument = squareDoc;
  failState: ApiError | null = null;

  async classify(): Promise<ClassifyResponse> {
    return classifySquare;
  }

  async branches(): Promise<BranchDocument> {
    if (this.branchesDelay) await this.branchesDelay();
    return this.doc;
  }

  async state(_a: AnglesDeg, _u: string, branchId: number, s: number): Promise<StateResponse> {
    this.stateCalls.push({ branchId, s });
    if (this.stateDelay) await this.stateDelay();
    if (this.failState) throw this.failState;
    return stateAt(s, this.selfIntersectsAlways);
  }
}

const immediate = (fn: () => void, _ms: number) => {
  fn();
  return 0;
};

const ANGLES = { alpha: 90, beta: 90, gamma: 90, delta: 90 };

describe("ExplorerStore", () => {
  it("lists 2 finite + 2 infinity branches for the square fixture", async () => {
    const store = new ExplorerStore(new FakeApi(), 9, immediate);
    await store.setAngles(ANGLES, "deg");
    const groups = store.branchGroups();
    expect(groups.finite.map((b) => b.branch_id)).toEqual([1, 2]);
    expect(groups.atInfinity.map((b) => b.branch_id)).toEqual([3, 4]);
  });

  it("selects the first finite branch and binds the slider domain", async () => {
    const store = new ExplorerStore(new FakeApi(), 9, immediate);
    await store.setAngles(ANGLES, "deg");
    expect(store.snapshot().selectedBranch).toBe(1);
    expect(store.sliderDomain()).toEqual([-Math.PI, Math.PI]);
  });

  it("keeps the self-intersection badge on across slider moves (butterfly)", async () => {
    const api = new FakeApi();
    api.selfIntersectsAlways = true; // the butterfly branch self-intersects everywhere
    const store = new ExplorerStore(api, 9, immediate);
    await store.setAngles(ANGLES, "deg");
    for (const s of [-1.0, -0.3, 0.4, 1.2]) {
      await store.setSlider(s, true);
      expect(store.snapshot().state?.self_intersects).toBe(true);
    }
  });

  it("drops stale state responses", async () => {
    const api = new FakeApi();
    const store = new ExplorerStore(api, 9, immediate);
    await store.setAngles(ANGLES, "deg");
    // first request resolves only after the second finishes
    let release: () => void = () => undefined;
    const blocked = new Promise<void>((r) => (release = r));
    api.stateDelay = () => blocked;
    const slow = store.setSlider(0.25, true);
    api.stateDelay = null;
    await store.setSlider(0.75, true);
    release();
    await slow;
    expect(store.snapshot().state?.x).toBe(0.75); // the stale 0.25 reply was discarded
  });

  it("drops superseded angle responses", async () => {
    const api = new FakeApi();
    const store = new ExplorerStore(api, 9, immediate);
    let release: () => void = () => undefined;
    const blocked = new Promise<void>((r) => (release = r));
    api.branchesDelay = () => blocked;
    const slowDoc: BranchDocument = { ...squareDoc, vertex_type: "Stale" };
    api.doc = slowDoc;
    const first = store.setAngles(ANGLES, "deg");
    api.branchesDelay = null;
    api.doc = squareDoc;
    await store.setAngles({ ...ANGLES, alpha: 60 }, "deg");
    release();
    await first;
    expect(store.snapshot().doc?.vertex_type).toBe("Square");
  });

  it("clamps the slider on an out-of-domain response", async () => {
    const api = new FakeApi();
    const store = new ExplorerStore(api, 9, immediate);
    await store.setAngles(ANGLES, "deg");
    api.failState = new ApiError(422, "parameter outside branch domain");
    const clampedPromise = store.setSlider(10.0, true); // beyond +pi
    api.failState = null;
    await clampedPromise;
    expect(store.snapshot().s).toBeLessThanOrEqual(Math.PI);
    expect(store.snapshot().s).toBeGreaterThan(3.0);
  });

  it("debounce delay is within the render latency budget", () => {
    expect(STATE_DEBOUNCE_MS).toBeLessThanOrEqual(100);
  });

  it("playback steps cycle inside the branch domain", async () => {
    const store = new ExplorerStore(new FakeApi(), 9, immediate);
    await store.setAngles(ANGLES, "deg");
    await store.setSlider(Math.PI - 1e-4, true);
    const next = store.playbackStep(0.01);
    expect(next).toBe(-Math.PI); // wrapped to the start
    await store.setSlider(0, true);
    const forward = store.playbackStep(0.01);
    expect(forward).toBeGreaterThan(0);
    expect(forward).toBeLessThan(Math.PI);
  });

  it("surfaces service errors inline", async () => {
    const api = new FakeApi();
    const store = new ExplorerStore(api, 9, immediate);
    api.classify = async () => {
      throw new ApiError(400, "quadrilateral inequality violated: delta < alpha+beta+gamma");
    };
    await store.setAngles({ alpha: 10, beta: 10, gamma: 10, delta: 350 }, "deg");
    expect(store.snapshot().error).toContain("delta");
    expect(store.snapshot().doc).toBeNull();
  });
});
