import init, { quotient_heatmap, bounds_curve, check_claims } from "./pkg/hybess_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function params() {
  return { d: num("d"), alpha: $("alpha").value, variant: $("variant").value, m: num("m") };
}

function colour(t) {
  // blue -> white -> red
  const c = Math.max(0, Math.min(1, t));
  const r = c < 0.5 ? 2 * c : 1;
  const b = c < 0.5 ? 1 : 2 * (1 - c);
  const g = 1 - Math.abs(2 * c - 1);
  return [r * 255, (0.4 + 0.6 * g) * 255, b * 255];
}

function drawHeatmap() {
  const p = params();
  const canvas = $("heatmap");
  const size = canvas.width / 2;
  const data = quotient_heatmap(p.d, p.alpha, $("kind").value, p.m, size, 0.999);
  let lo = Infinity, hi = -Infinity;
  for (const v of data) if (Number.isFinite(v)) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
  const img = new ImageData(size, size);
  data.forEach((v, i) => {
    const [r, g, b] = Number.isFinite(v) ? colour((v - lo) / (hi - lo || 1)) : [255, 255, 255];
    img.data.set([r, g, b, 255], 4 * i);
  });
  const off = new OffscreenCanvas(size, size);
  off.getContext("2d").putImageData(img, 0, 0);
  const ctx = canvas.getContext("2d");
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
  $("heat-range").textContent = `min ${lo.toFixed(6)}, max ${hi.toFixed(6)}`;
  const legend = $("legend").getContext("2d");
  for (let x = 0; x < 200; x++) {
    const [r, g, b] = colour(x / 199);
    legend.fillStyle = `rgb(${r},${g},${b})`;
    legend.fillRect(x, 0, 1, 14);
  }
}

function drawCurve() {
  const p = params();
  const lo = Math.max(num("lo"), -0.999), hi = num("hi");
  const pts = JSON.parse(bounds_curve(p.d, lo, hi, 200, p.variant));
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 30;
  ctx.clearRect(0, 0, W, H);
  const ys = pts.flatMap((q) => [q.theorem1, q.theorem2].filter(Boolean).flat());
  const ymin = Math.min(0, ...ys), ymax = Math.max(1, ...ys);
  const sx = (a) => pad + ((a - lo) / (hi - lo)) * (W - 2 * pad);
  const sy = (v) => H - pad - ((v - ymin) / (ymax - ymin)) * (H - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillStyle = "#555";
  ctx.fillText(ymax.toFixed(2), 2, pad + 4);
  ctx.fillText(ymin.toFixed(2), 2, H - pad);
  ctx.fillText(lo.toFixed(2), pad, H - 10);
  ctx.fillText(hi.toFixed(2), W - pad - 20, H - 10);
  const series = [
    ["theorem1", 0, "#0969da", []], ["theorem1", 1, "#8250df", []],
    ["theorem2", 0, "#1a7f37", [5, 4]], ["theorem2", 1, "#bc4c00", [5, 4]],
  ];
  for (const [key, idx, colourStr, dash] of series) {
    ctx.strokeStyle = colourStr;
    ctx.setLineDash(dash);
    ctx.beginPath();
    let pen = false;
    for (const q of pts) {
      const v = q[key] && q[key][idx];
      if (v === undefined || !q[`${key}Gate`]) { pen = false; continue; }
      pen ? ctx.lineTo(sx(q.alpha), sy(v)) : ctx.moveTo(sx(q.alpha), sy(v));
      pen = true;
    }
    ctx.stroke();
  }
  ctx.setLineDash([]);
}

function runClaims() {
  const p = params();
  const rows = JSON.parse(check_claims(p.d, p.alpha, p.variant, p.m, num("radii"), num("angles")));
  const fmt = (v) => (v === null ? "–" : v.toFixed(6));
  $("claims").innerHTML =
    "<tr><th>claim</th><th>gate</th><th>bound</th><th>extremum</th><th>margin</th><th>witness</th><th>status</th></tr>" +
    rows.map((r) =>
      `<tr><td>${r.claim}</td><td>${r.gate ? "yes" : "no"}</td><td>${fmt(r.bound)}</td>` +
      `<td>${fmt(r.extremum)}</td><td>${fmt(r.margin)}</td>` +
      `<td>${r.witness[0].toFixed(4)} ${r.witness[1] < 0 ? "−" : "+"} ${Math.abs(r.witness[1]).toFixed(4)}i</td>` +
      `<td class="${r.status}">${r.status}</td></tr>`).join("");
}

function guarded(fn) {
  return () => {
    try {
      $("error").textContent = "";
      fn();
    } catch (e) {
      $("error").textContent = e.message ?? String(e);
    }
  };
}

await init();
const refresh = guarded(() => { drawHeatmap(); drawCurve(); });
for (const id of ["d", "alpha", "variant", "m", "kind", "lo", "hi"]) $(id).addEventListener("change", refresh);
$("run").addEventListener("click", guarded(runClaims));
refresh();
guarded(runClaims)();
