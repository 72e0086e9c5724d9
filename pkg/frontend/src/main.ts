// DOM wiring for the explorer: angle inputs feed /classify + /branches, the
// branch selector and slider feed /state, and the canvases render whatever
// the service returned.

import { AnglesDeg, BranchJson, HttpApi, StateResponse } from "./api.js";
import { Camera, creaseDash, project, Vec3 } from "./geometry.js";
import { branchCurve, infinityMarkers, splitAtWrap } from "./plots.js";
import { ExplorerStore } from "./store.js";

const api = new HttpApi("");
const store = new ExplorerStore(api, 129);

const el = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

const angleInputs = {
  alpha: el<HTMLInputElement>("alpha"),
  beta: el<HTMLInputElement>("beta"),
  gamma: el<HTMLInputElement>("gamma"),
  delta: el<HTMLInputElement>("delta"),
};
const unitSelect = el<HTMLSelectElement>("unit");
const branchSelect = el<HTMLSelectElement>("branch");
const slider = el<HTMLInputElement>("slider");
const playToggle = el<HTMLInputElement>("play");
const sphereCanvas = el<HTMLCanvasElement>("sphere");
const plotCanvas = el<HTMLCanvasElement>("plots");

const cam: Camera = { yaw: 0.7, pitch: 0.5, scale: 150 };

function currentAngles(): AnglesDeg {
  return {
    alpha: parseFloat(angleInputs.alpha.value),
    beta: parseFloat(angleInputs.beta.value),
    gamma: parseFloat(angleInputs.gamma.value),
    delta: parseFloat(angleInputs.delta.value),
  };
}

function submitAngles(): void {
  const a = currentAngles();
  if (Object.values(a).some((v) => !Number.isFinite(v))) return;
  void store.setAngles(a, unitSelect.value as "deg" | "rad");
}

for (const input of Object.values(angleInputs)) {
  input.addEventListener("change", submitAngles);
}
unitSelect.addEventListener("change", submitAngles);

branchSelect.addEventListener("change", () => {
  void store.selectBranch(parseInt(branchSelect.value, 10));
});

slider.addEventListener("input", () => {
  void store.setSlider(parseFloat(slider.value));
});

playToggle.addEventListener("change", () => store.setPlaying(playToggle.checked));

let dragging = false;
let last: [number, number] = [0, 0];
sphereCanvas.addEventListener("pointerdown", (ev) => {
  dragging = true;
  last = [ev.clientX, ev.clientY];
});
window.addEventListener("pointerup", () => (dragging = false));
window.addEventListener("pointermove", (ev) => {
  if (!dragging) return;
  cam.yaw += 0.01 * (ev.clientX - last[0]);
  cam.pitch += 0.01 * (ev.clientY - last[1]);
  cam.pitch = Math.max(-1.5, Math.min(1.5, cam.pitch));
  last = [ev.clientX, ev.clientY];
  renderSphere(store.snapshot().state);
});

function describeBranch(b: BranchJson): string {
  const inf = b.at_infinity ? " (at infinity)" : "";
  return `branch ${b.branch_id} — ${b.label}${inf}`;
}

function fmt(v: number | "inf", digits = 4): string {
  return v === "inf" ? "∞" : (v as number).toFixed(digits);
}

function degrees(rho: number): string {
  return ((rho * 180) / Math.PI).toFixed(2) + "°";
}

function renderClassification(): void {
  const snap = store.snapshot();
  const cls = snap.classification;
  el("type-badge").textContent = cls ? cls.type + (cls.orthodiagonal ? " (orthodiagonal)" : "") : "—";
  el("grashof-badge").hidden = !(cls && cls.grashof);
  el("modulus").textContent = cls && cls.M !== undefined ? `M = ${cls.M.toFixed(6)}` : "";
  const err = el("error");
  err.textContent = snap.error ?? "";
  err.hidden = !snap.error;
}

function renderBranchList(): void {
  const { finite, atInfinity } = store.branchGroups();
  branchSelect.innerHTML = "";
  for (const b of [...finite, ...atInfinity]) {
    const opt = document.createElement("option");
    opt.value = String(b.branch_id);
    opt.textContent = describeBranch(b);
    branchSelect.appendChild(opt);
  }
  const sel = store.snapshot().selectedBranch;
  if (sel !== null) branchSelect.value = String(sel);
  el("branch-summary").textContent = `${finite.length} finite + ${atInfinity.length} infinity branches`;
  const [lo, hi] = store.sliderDomain();
  slider.min = String(lo);
  slider.max = String(hi);
  slider.step = String((hi - lo) / 600 || 0.01);
}

function renderReadouts(st: StateResponse | null): void {
  const snap = store.snapshot();
  slider.value = String(snap.s);
  const table = el("readouts");
  if (!st) {
    table.innerHTML = "";
    el("intersect-badge").hidden = true;
    return;
  }
  table.innerHTML = `
    <tr><th>x</th><td>${fmt(st.x)}</td><th>ρ_x</th><td>${degrees(st.rho_x)}</td></tr>
    <tr><th>y</th><td>${fmt(st.y)}</td><th>ρ_y</th><td>${degrees(st.rho_y)}</td></tr>
    <tr><th>z</th><td>${fmt(st.z)}</td><th>ρ_z</th><td>${degrees(st.rho_z)}</td></tr>
    <tr><th>w</th><td>${fmt(st.w)}</td><th>ρ_w</th><td>${degrees(st.rho_w)}</td></tr>
    <tr><th>u</th><td>${degrees(st.u)}</td><th>v</th><td>${degrees(st.v)}</td></tr>
    <tr><th>closure</th><td colspan="3">${st.closure_residual.toExponential(2)}</td></tr>`;
  el("intersect-badge").hidden = !st.self_intersects;
}

function renderSphere(st: StateResponse | null): void {
  const ctx = sphereCanvas.getContext("2d")!;
  const { width, height } = sphereCanvas;
  ctx.clearRect(0, 0, width, height);
  const cx = width / 2;
  const cy = height / 2;
  ctx.strokeStyle = "#8892a6";
  ctx.setLineDash([]);
  ctx.beginPath();
  ctx.arc(cx, cy, cam.scale, 0, 2 * Math.PI);
  ctx.stroke();
  if (!st) return;
  const folds = [st.rho_x, st.rho_w, st.rho_z, st.rho_y]; // crease order around the vertex
  st.crease_dirs.forEach((d, i) => {
    const p = project(d as Vec3, cam, cx, cy);
    ctx.strokeStyle = p.depth >= 0 ? "#1d64d0" : "#9db8e8";
    ctx.setLineDash(creaseDash(folds[i]));
    ctx.beginPath();
    ctx.moveTo(cx, cy);
    ctx.lineTo(p.sx, p.sy);
    ctx.stroke();
  });
  ctx.setLineDash([]);
  for (const arc of st.arcs) {
    ctx.beginPath();
    arc.forEach((v, i) => {
      const p = project(v as Vec3, cam, cx, cy);
      if (i === 0) ctx.moveTo(p.sx, p.sy);
      else ctx.lineTo(p.sx, p.sy);
    });
    ctx.strokeStyle = "#c2403a";
    ctx.stroke();
  }
}

function renderPlots(): void {
  const snap = store.snapshot();
  const ctx = plotCanvas.getContext("2d")!;
  const { width, height } = plotCanvas;
  ctx.clearRect(0, 0, width, height);
  if (!snap.doc) return;
  const half = width / 2;
  const panes: ["y" | "z", number][] = [
    ["y", 0],
    ["z", half],
  ];
  const toPane = (px: number, py: number, x0: number) => [
    x0 + ((px + Math.PI) / (2 * Math.PI)) * (half - 20) + 10,
    height - 10 - ((py + Math.PI) / (2 * Math.PI)) * (height - 20),
  ];
  for (const [coord, x0] of panes) {
    ctx.strokeStyle = "#ccc";
    ctx.strokeRect(x0 + 10, 10, half - 20, height - 20);
    ctx.fillStyle = "#555";
    ctx.fillText(`ρ_${coord} vs ρ_x`, x0 + 16, 22);
    for (const b of snap.doc.branches) {
      ctx.strokeStyle = b.at_infinity ? "#b9a23c" : b.branch_id % 2 ? "#1d64d0" : "#3aa05a";
      for (const seg of splitAtWrap(branchCurve(b, coord))) {
        ctx.beginPath();
        seg.forEach((p, i) => {
          const [sx, sy] = toPane(p.px, p.py, x0);
          if (i === 0) ctx.moveTo(sx, sy);
          else ctx.lineTo(sx, sy);
        });
        ctx.stroke();
      }
    }
    ctx.fillStyle = "#c2403a";
    for (const m of infinityMarkers(snap.doc.infinity_solutions, coord)) {
      const [sx, sy] = toPane(m.px, m.py, x0);
      ctx.beginPath();
      ctx.arc(sx, sy, 3, 0, 2 * Math.PI);
      ctx.fill();
    }
    if (snap.state) {
      const st = snap.state;
      const p = {
        px: st.rho_x,
        py: coord === "y" ? st.rho_y : st.rho_z,
      };
      const [sx, sy] = toPane(p.px, p.py, x0);
      ctx.fillStyle = "#111";
      ctx.beginPath();
      ctx.arc(sx, sy, 4, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
}

store.onChange(() => {
  renderClassification();
  renderBranchList();
  renderReadouts(store.snapshot().state);
  renderSphere(store.snapshot().state);
  renderPlots();
});

function playbackLoop(): void {
  const snap = store.snapshot();
  if (snap.playing && snap.doc) {
    void store.setSlider(store.playbackStep());
  }
  requestAnimationFrame(playbackLoop);
}

submitAngles();
requestAnimationFrame(playbackLoop);
