import init, { bracketCurve, familyMember, orientAndColour } from "./pkg/ochromatic_web.js";

const PALETTE = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6",
  "#bfef45", "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075"];

function colourOf(i) {
  return i < PALETTE.length ? PALETTE[i] : `hsl(${(i * 137.5) % 360} 65% 50%)`;
}

function call(f, ...args) {
  try {
    return { ok: JSON.parse(f(...args)) };
  } catch (e) {
    return { err: String(e) };
  }
}

function drawCurve() {
  const out = document.getElementById("curve-out");
  const r = call(bracketCurve, Number(document.getElementById("curve-d").value));
  const canvas = document.getElementById("curve");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (r.err) { out.textContent = r.err; out.className = "fail"; return; }
  out.className = "";
  const pts = r.ok;
  const pad = 40, w = canvas.width - 2 * pad, h = canvas.height - 2 * pad;
  const ymax = Math.max(...pts.map(p => Math.log2(p.uncapped_upper)), 1);
  const x = d => pad + (w * (d - 1)) / Math.max(pts.length - 1, 1);
  const y = v => pad + h - (h * Math.log2(Math.max(v, 1))) / ymax;
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w, h);
  const series = [["lower", "#4363d8"], ["upper", "#e6194b"], ["uncapped_upper", "#bbb"]];
  for (const [key, colour] of series) {
    ctx.strokeStyle = colour;
    ctx.beginPath();
    pts.forEach((p, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, x(p.d), y(p[key])));
    ctx.stroke();
  }
  ctx.fillStyle = "#222";
  ctx.fillText("d", canvas.width - pad + 8, pad + h);
  ctx.fillText("log2 χo", 4, pad - 8);
  out.textContent = pts.map(p => `d=${p.d}: [${p.lower_int}, ${p.upper_int}]`).join("   ");
}

function circle(n, canvas) {
  const cx = canvas.width / 2, cy = canvas.height / 2, r = Math.min(cx, cy) - 40;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
  });
}

function drawArcs(ctx, pos, arcs, highlight) {
  for (const [u, v] of arcs) {
    const [x1, y1] = pos[u], [x2, y2] = pos[v];
    const a = Math.atan2(y2 - y1, x2 - x1);
    const ex = x2 - 11 * Math.cos(a), ey = y2 - 11 * Math.sin(a);
    ctx.strokeStyle = ctx.fillStyle = "rgba(60,60,60,0.55)";
    ctx.beginPath(); ctx.moveTo(x1, y1); ctx.lineTo(ex, ey); ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(ex, ey);
    ctx.lineTo(ex - 8 * Math.cos(a - 0.35), ey - 8 * Math.sin(a - 0.35));
    ctx.lineTo(ex - 8 * Math.cos(a + 0.35), ey - 8 * Math.sin(a + 0.35));
    ctx.fill();
  }
  if (highlight) {
    const [u, v] = highlight;
    ctx.setLineDash([5, 4]);
    ctx.strokeStyle = "#b00";
    ctx.beginPath(); ctx.moveTo(...pos[u]); ctx.lineTo(...pos[v]); ctx.stroke();
    ctx.setLineDash([]);
  }
}

function drawVertices(ctx, pos, fill, labels) {
  pos.forEach(([x, y], i) => {
    ctx.fillStyle = fill(i);
    ctx.beginPath(); ctx.arc(x, y, 9, 0, 2 * Math.PI); ctx.fill();
    ctx.fillStyle = "#222";
    ctx.fillText(labels(i), x + 11, y - 11);
  });
}

function drawFamily() {
  const out = document.getElementById("family-out");
  const r = call(familyMember, Number(document.getElementById("family-p").value));
  const canvas = document.getElementById("family");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (r.err) { out.textContent = r.err; out.className = "fail"; return; }
  const f = r.ok;
  const pos = circle(f.n, canvas);
  drawArcs(ctx, pos, f.arcs, null);
  drawVertices(ctx, pos, i => colourOf(i), i => `${f.labels[i][0]}${f.labels[i][1]}`);
  out.className = f.passed ? "" : "fail";
  out.textContent = f.clauses.map(c => `${c.passed ? "PASS" : "FAIL"} ${c.name}: ${c.detail}`).join("\n");
}

function drawOrientation() {
  const out = document.getElementById("orient-out");
  const kind = document.getElementById("orient-kind").value;
  const size = Number(document.getElementById("orient-size").value);
  const seed = BigInt(document.getElementById("orient-seed").value || 0);
  const r = call(orientAndColour, kind, size, seed);
  const canvas = document.getElementById("orient");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (r.err) { out.textContent = r.err; out.className = "fail"; return; }
  const v = r.ok;
  const pos = circle(v.n, canvas);
  drawArcs(ctx, pos, v.arcs, v.is_oclique ? null : v.far_pair);
  drawVertices(ctx, pos, i => colourOf(v.colours[i]), i => `${i}:${v.colours[i]}`);
  out.className = "";
  const diam = v.pair_diameter === null ? "infinite" : v.pair_diameter;
  out.textContent = `χo = ${v.chi}${v.exact ? "" : " (budget exhausted, upper bound)"}; ` +
    `pair-diameter ${diam}` + (v.is_oclique ? "; oclique, so every vertex has its own colour"
      : `; farthest pair (${v.far_pair[0]}, ${v.far_pair[1]}) dashed`);
}

await init();
document.getElementById("curve-d").addEventListener("input", drawCurve);
document.getElementById("family-p").addEventListener("input", drawFamily);
document.getElementById("orient-go").addEventListener("click", drawOrientation);
drawCurve();
drawFamily();
drawOrientation();
