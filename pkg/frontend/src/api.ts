// Typed client for the spherilink service. The UI performs no kinematic
// math of its own: every displayed number comes from these responses.

export interface AnglesDeg {
  alpha: number;
  beta: number;
  gamma: number;
  delta: number;
}

export type Coord = number | "inf";

export interface ClassifyResponse {
  type: string;
  orthodiagonal: boolean;
  sigma: number;
  angles_rad: AnglesDeg;
  grashof: boolean;
  reachable_infinities: string[];
  M?: number;
  amplitudes?: Record<string, [number, number]>;
}

export interface SampleRow {
  s: number;
  x: Coord;
  y: Coord;
  z: Coord;
  w: Coord;
  rho_x: number;
  rho_y: number;
  rho_z: number;
  rho_w: number;
  u: number;
  v: number;
  self_intersects: boolean;
  closure_residual: number;
}

export interface BranchJson {
  branch_id: number;
  kind: string;
  label: string;
  at_infinity: boolean;
  closure_at_infinity: boolean;
  s_domain: [number, number];
  samples: SampleRow[];
}

export interface BranchDocument {
  schema_version: string;
  vertex_type: string;
  orthodiagonal: boolean;
  M?: number;
  branches: BranchJson[];
  infinity_solutions: { x: Coord; y: Coord; z: Coord; w: Coord; isolated: boolean }[];
}

export interface StateResponse {
  x: Coord;
  y: Coord;
  z: Coord;
  w: Coord;
  rho_x: number;
  rho_y: number;
  rho_z: number;
  rho_w: number;
  u: number;
  v: number;
  self_intersects: boolean;
  closure_residual: number;
  crease_dirs: number[][];
  arcs: number[][][];
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

export interface Api {
  classify(angles: AnglesDeg, unit: string): Promise<ClassifyResponse>;
  branches(angles: AnglesDeg, unit: string, n: number): Promise<BranchDocument>;
  state(angles: AnglesDeg, unit: string, branchId: number, s: number): Promise<StateResponse>;
}

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const res = await fetch(base + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const data = await res.json();
      if (typeof data.detail === "string") detail = data.detail;
    } catch {
      // keep statusText
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class HttpApi implements Api {
  constructor(private base: string = "") {}

  classify(angles: AnglesDeg, unit: string): Promise<ClassifyResponse> {
    return post(this.base, "/classify", { ...angles, unit });
  }

  branches(angles: AnglesDeg, unit: string, n: number): Promise<BranchDocument> {
    return post(this.base, "/branches", { ...angles, unit, n });
  }

  state(angles: AnglesDeg, unit: string, branchId: number, s: number): Promise<StateResponse> {
    return post(this.base, "/state", { ...angles, unit, branch_id: branchId, s });
  }
}
