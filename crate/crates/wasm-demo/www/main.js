import init, { yearReport, astroMinusCatholic, longitudeCurve } from "./pkg/easter_wasm.js";

const $ = (id) => document.getElementById(id);

function showYear() {
  $("year-error").textContent = "";
  try {
    const r = yearReport(Number($("year").value));
    $("orthodox").textContent = r.orthodox;
    $("catholic").textContent = r.catholic;
    $("astronomical").textContent = r.astronomical;
    $("trace").textContent = r.trace;
    r.free();
  } catch (e) {
    $("year-error").textContent = e.message;
  }
}

function showDifferences() {
  $("diff-error").textContent = "";
  const from = Number($("from").value);
  let diffs;
  try {
    diffs = astroMinusCatholic(from, Number($("to").value));
  } catch (e) {
    $("diff-error").textContent = e.message;
    return;
  }
  const canvas = $("diff-chart");
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const lo = -35, hi = 35;
  const y = (v) => height - ((v - lo) / (hi - lo)) * height;
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(width, y(0));
  ctx.stroke();
  const w = width / diffs.length;
  const counts = new Map();
  diffs.forEach((d, i) => {
    counts.set(d, (counts.get(d) || 0) + 1);
    if (d === 0) return;
    ctx.fillStyle = d > 0 ? "#c60" : "#369";
    ctx.fillRect(i * w, Math.min(y(0), y(d)), Math.max(w - 1, 1), Math.abs(y(d) - y(0)));
  });
  const parts = [...counts.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([d, n]) => `${d > 0 ? "+" : ""}${d}: ${n}`);
  $("diff-summary").textContent = `${diffs.length} years starting ${from}; ${parts.join(", ")}`;
}

function showCurve() {
  $("curve-error").textContent = "";
  let c;
  try {
    c = longitudeCurve(Number($("curve-year").value), 3, 241);
  } catch (e) {
    $("curve-error").textContent = e.message;
    return;
  }
  const offsets = c.offsets, longitudes = c.longitudes;
  const canvas = $("curve-chart");
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const x = (d) => ((d - offsets[0]) / (offsets[offsets.length - 1] - offsets[0])) * width;
  const y = (l) => height / 2 - (l / 3.5) * (height / 2);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(width, y(0));
  ctx.stroke();
  ctx.strokeStyle = "#369";
  ctx.beginPath();
  offsets.forEach((d, i) => (i ? ctx.lineTo(x(d), y(longitudes[i])) : ctx.moveTo(x(d), y(longitudes[i]))));
  ctx.stroke();
  ctx.strokeStyle = "#c00";
  ctx.beginPath();
  ctx.moveTo(x(c.equinox_offset), 0);
  ctx.lineTo(x(c.equinox_offset), height);
  ctx.stroke();
  $("curve-summary").textContent =
    `Equinox ${c.equinox_label} (${c.equinox_offset.toFixed(4)} d from 21 March 0h). Axis spans 21 March ± 3 d.`;
  c.free();
}

await init();
$("year").addEventListener("input", showYear);
$("from").addEventListener("input", showDifferences);
$("to").addEventListener("input", showDifferences);
$("curve-year").addEventListener("input", showCurve);
showYear();
showDifferences();
showCurve();
