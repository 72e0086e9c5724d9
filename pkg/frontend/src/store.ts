// Explorer state machine, framework-free so it can be unit tested.
//
// Every request carries a token; responses arriving after a newer request of
// the same kind are dropped, so a slow /branches can never clobber the view
// of a fresher one.

import { Api, ApiError, AnglesDeg, BranchDocument, BranchJson, ClassifyResponse, StateResponse } from "./api.js";

export const STATE_DEBOUNCE_MS = 40; // well under the 100 ms render budget

export interface ExplorerSnapshot {
  angles: AnglesDeg;
  unit: "deg" | "rad";
  classification: ClassifyResponse | null;
  doc: BranchDocument | null;
  selectedBranch: number | null;
  s: number;
  state: StateResponse | null;
  error: string | null;
  playing: boolean;
}

type Scheduler = (fn: () => void, ms: number) => unknown;

export class ExplorerStore {
  private snap: ExplorerSnapshot = {
    angles: { alpha: 90, beta: 90, gamma: 90, delta: 90 },
    unit: "deg",
    classification: null,
    doc: null,
    selectedBranch: null,
    s: 0,
    state: null,
    error: null,
    playing: false,
  };

  private listeners: ((s: ExplorerSnapshot) => void)[] = [];
  private anglesToken = 0;
  private stateToken = 0;
  private pendingTimer: unknown = null;
  private samplesPerBranch: number;

  constructor(
    private api: Api,
    samplesPerBranch = 65,
    private schedule: Scheduler = (fn, ms) => setTimeout(fn, ms),
  ) {
    this.samplesPerBranch = samplesPerBranch;
  }

  snapshot(): ExplorerSnapshot {
    return this.snap;
  }

  onChange(fn: (s: ExplorerSnapshot) => void): void {
    this.listeners.push(fn);
  }

  private emit(patch: Partial<ExplorerSnapshot>): void {
    this.snap = { ...this.snap, ...patch };
    for (const fn of this.listeners) fn(this.snap);
  }

  branchGroups(): { finite: BranchJson[]; atInfinity: BranchJson[] } {
    const branches = this.snap.doc?.branches ?? [];
    return {
      finite: branches.filter((b) => !b.at_infinity),
      atInfinity: branches.filter((b) => b.at_infinity),
    };
  }

  selectedBranchJson(): BranchJson | null {
    const id = this.snap.selectedBranch;
    return this.snap.doc?.branches.find((b) => b.branch_id === id) ?? null;
  }

  sliderDomain(): [number, number] {
    const b = this.selectedBranchJson();
    return b ? b.s_domain : [0, 0];
  }

  async setAngles(angles: AnglesDeg, unit: "deg" | "rad" = this.snap.unit): Promise<void> {
    const token = ++this.anglesToken;
    this.emit({ angles, unit, error: null });
    try {
      const [cls, doc] = await Promise.all([
        this.api.classify(angles, unit),
        this.api.branches(angles, unit, this.samplesPerBranch),
      ]);
      if (token !== this.anglesToken) return; // superseded
      const first = doc.branches.find((b) => !b.at_infinity) ?? doc.branches[0] ?? null;
      this.emit({
        classification: cls,
        doc,
        selectedBranch: first ? first.branch_id : null,
        state: null,
        error: null,
      });
      if (first) {
        const [lo, hi] = first.s_domain;
        await this.setSlider(lo + 0.5 * (hi - lo), true);
      }
    } catch (err) {
      if (token !== this.anglesToken) return;
      this.emit({
        classification: null,
        doc: null,
        selectedBranch: null,
        state: null,
        error: err instanceof Error ? err.message : String(err),
      });
    }
  }

  async selectBranch(branchId: number): Promise<void> {
    if (!this.snap.doc) return;
    this.emit({ selectedBranch: branchId });
    const [lo, hi] = this.sliderDomain();
    const mid = lo + 0.5 * (hi - lo);
    await this.setSlider(Math.min(Math.max(this.snap.s, lo), hi) || mid, true);
  }

  clampToDomain(s: number): number {
    const [lo, hi] = this.sliderDomain();
    const pad = 1e-9 * Math.max(1, Math.abs(hi - lo));
    return Math.min(Math.max(s, lo + pad), hi - pad);
  }

  /** Debounced slider update; resolves when the (possibly dropped) fetch settles. */
  setSlider(s: number, immediate = false): Promise<void> {
    this.emit({ s });
    const token = ++this.stateToken;
    return new Promise((resolve) => {
      const run = async () => {
        if (token !== this.stateToken) return resolve();
        await this.fetchState(token, s);
        resolve();
      };
      if (immediate) {
        void run();
      } else {
        if (this.pendingTimer !== null && typeof clearTimeout === "function") {
          clearTimeout(this.pendingTimer as Parameters<typeof clearTimeout>[0]);
        }
        this.pendingTimer = this.schedule(run, STATE_DEBOUNCE_MS);
      }
    });
  }

  private async fetchState(token: number, s: number): Promise<void> {
    const branchId = this.snap.selectedBranch;
    if (branchId === null) return;
    try {
      const st = await this.api.state(this.snap.angles, this.snap.unit, branchId, s);
      if (token !== this.stateToken) return; // stale response: drop
      this.emit({ state: st, error: null });
    } catch (err) {
      if (token !== this.stateToken) return;
      if (err instanceof ApiError && err.status === 422) {
        // out-of-domain slider position: clamp and retry once
        const clamped = this.clampToDomain(s);
        if (clamped !== s) {
          this.emit({ s: clamped });
          await this.fetchState(token, clamped);
          return;
        }
      }
      this.emit({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  setPlaying(playing: boolean): void {
    this.emit({ playing });
  }

  /** One playback step: advance the slider cyclically through the domain. */
  playbackStep(fraction = 0.004): number {
    const [lo, hi] = this.sliderDomain();
    if (hi <= lo) return this.snap.s;
    let next = this.snap.s + fraction * (hi - lo);
    if (next > hi) next = lo;
    return next;
  }
}
