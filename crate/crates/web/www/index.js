import init, { fnomial_triangle, cobweb_poset, lgv_grid } from "./pkg/fibonomial_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#fff", "#4a7bd0", "#e07b39", "#5aa469", "#b04ac0", "#c9b23a", "#3ab0b0"];

function call(fn, ...args) {
  try {
    return { value: JSON.parse(fn(...args)) };
  } catch (e) {
    return { error: String(e.message ?? e) };
  }
}

function renderTriangle() {
  $("tri-rows-v").textContent = $("tri-rows").value;
  const r = call(fnomial_triangle, $("tri-seq").value, Number($("tri-rows").value), $("tri-method").value);
  if (r.error) {
    $("tri-status").innerHTML = `<span class="err">${r.error}</span>`;
    $("tri-out").innerHTML = "";
    return;
  }
  const t = r.value;
  const m = BigInt(Math.max(0, Number($("tri-mod").value)));
  $("tri-status").textContent = `${t.sequence} via ${t.method}; other method agrees: ${t.cross_checked}`;
  const table = document.createElement("table");
  table.className = "tri";
  for (const row of t.rows) {
    const tr = table.insertRow();
    const pad = t.rows.length - row.length;
    const td0 = tr.insertCell();
    td0.colSpan = pad;
    for (const v of row) {
      const td = tr.insertCell();
      td.colSpan = 2;
      td.title = v;
      if (m > 1n) {
        const res = Number(BigInt(v) % m);
        td.style.background = COLORS[res % COLORS.length];
        td.style.color = res ? "#fff" : "#222";
      }
      td.textContent = v.length > 8 ? v.slice(0, 6) + "…" : v;
    }
  }
  $("tri-out").replaceChildren(table);
}

function renderCobweb() {
  $("cw-levels-v").textContent = $("cw-levels").value;
  const canvas = $("cw-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const r = call(cobweb_poset, $("cw-seq").value, Number($("cw-levels").value));
  if (r.error) {
    $("cw-out").textContent = r.error;
    return;
  }
  const p = r.value;
  const n = p.level_sizes.length;
  const pos = p.level_sizes.map((size, i) => {
    const y = canvas.height - 20 - (i * (canvas.height - 40)) / Math.max(1, n - 1);
    return Array.from({ length: size }, (_, j) => [((j + 1) * canvas.width) / (size + 1), y]);
  });
  ctx.strokeStyle = "rgba(60,90,160,0.25)";
  for (let s = 0; s + 1 < n; s++) {
    for (const [x0, y0] of pos[s]) {
      for (const [x1, y1] of pos[s + 1]) {
        ctx.beginPath();
        ctx.moveTo(x0, y0);
        ctx.lineTo(x1, y1);
        ctx.stroke();
      }
    }
  }
  ctx.fillStyle = "#223";
  for (const level of pos) for (const [x, y] of level) {
    ctx.beginPath();
    ctx.arc(x, y, 3, 0, 2 * Math.PI);
    ctx.fill();
  }
  const lines = [
    `levels ${JSON.stringify(p.level_sizes)}, ${p.covers} covering edges, ${p.full_chains} maximal chains`,
    `binomial poset: ${p.is_binomial}`,
  ];
  if (p.counterexample) {
    const [[a0, a1, ac], [b0, b1, bc]] = p.counterexample;
    lines.push(`  intervals Φ${a0}→Φ${a1} and Φ${b0}→Φ${b1} have equal length but ${ac} vs ${bc} maximal chains`);
  }
  for (const [len, counts] of p.by_length) lines.push(`  length ${len}: chain counts {${counts.join(", ")}}`);
  lines.push(`Möbius μ(Φs, Φt) (convolution check ${p.mobius_convolution_ok ? "ok" : "FAILED"}):`);
  for (const e of p.mobius) if (e.from_level < e.to_level) lines.push(`  μ(Φ${e.from_level}, Φ${e.to_level}) = ${e.mu}`);
  $("cw-out").textContent = lines.join("\n");
}

function renderLgv() {
  const w = Number($("lgv-w").value), h = Number($("lgv-h").value);
  const canvas = $("lgv-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const r = call(lgv_grid, w, h, $("lgv-src").value, $("lgv-snk").value);
  if (r.error) {
    $("lgv-out").textContent = r.error;
    return;
  }
  const v = r.value;
  const step = (canvas.width - 40) / Math.max(w, h);
  const at = ([x, y]) => [20 + x * step, canvas.height - 20 - y * step];
  ctx.strokeStyle = "#ddd";
  for (let x = 0; x <= w; x++) { ctx.beginPath(); ctx.moveTo(...at([x, 0])); ctx.lineTo(...at([x, h])); ctx.stroke(); }
  for (let y = 0; y <= h; y++) { ctx.beginPath(); ctx.moveTo(...at([0, y])); ctx.lineTo(...at([w, y])); ctx.stroke(); }
  (v.example ?? []).forEach((path, i) => {
    ctx.strokeStyle = COLORS[1 + (i % (COLORS.length - 1))];
    ctx.lineWidth = 3;
    ctx.beginPath();
    path.forEach((pt, k) => (k ? ctx.lineTo(...at(pt)) : ctx.moveTo(...at(pt))));
    ctx.stroke();
    ctx.lineWidth = 1;
  });
  $("lgv-out").textContent = [
    `path matrix ${JSON.stringify(v.matrix)}`,
    `determinant ${v.determinant}`,
    `vertex-disjoint systems (brute force) ${v.brute_force}`,
    `nonpermutable ${v.nonpermutable}, equal ${v.equal}`,
    v.example ? "drawn: one disjoint system" : "no disjoint system for the identity matching",
  ].join("\n");
}

await init();
for (const id of ["tri-seq", "tri-rows", "tri-method", "tri-mod"]) $(id).addEventListener("input", renderTriangle);
for (const id of ["cw-seq", "cw-levels"]) $(id).addEventListener("input", renderCobweb);
for (const id of ["lgv-w", "lgv-h", "lgv-src", "lgv-snk"]) $(id).addEventListener("input", renderLgv);
renderTriangle();
renderCobweb();
renderLgv();
