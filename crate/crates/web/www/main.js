import init, { alexander_diagram, surgery_strip, norm_table } from "./pkg/lens_surgery_web.js";

const $ = (id) => document.getElementById(id);
const int = (id) => parseInt($(id).value, 10);

const COLORS = {
  lens: "#2a7", not_lens: "#ddd", inconclusive: "#e90",
  seifert: "#68c", connected_sum: "#a6c", invalid: "#fff",
};

function fail(el, e) {
  el.className = "out err";
  el.textContent = String(e.message ?? e);
}

function drawDiagram() {
  const out = $("ax-out"), cv = $("ax-canvas"), g = cv.getContext("2d");
  g.clearRect(0, 0, cv.width, cv.height);
  let d;
  try {
    d = JSON.parse(alexander_diagram($("ax-family").value, int("ax-m"), int("ax-n")));
  } catch (e) {
    return fail(out, e);
  }
  out.className = "out";
  out.textContent = d.polynomial + (d.cut ? "\ncut sequence: " + d.cut.join(", ") : "");
  const pts = d.terms.map((p) => [Number(p.t), Number(p.x), p.c]);
  const tMax = Math.max(1, ...pts.map((p) => p[0]));
  const xMax = Math.max(1, ...pts.map((p) => p[1]));
  const pad = 30, w = cv.width - 2 * pad, h = cv.height - 2 * pad;
  const at = (t, x) => [pad + (t / tMax) * w, cv.height - pad - (x / xMax) * h];
  g.strokeStyle = "#bbb";
  g.beginPath();
  g.moveTo(pad, pad);
  g.lineTo(pad, cv.height - pad);
  g.lineTo(cv.width - pad, cv.height - pad);
  g.stroke();
  g.fillStyle = "#555";
  g.fillText("t", cv.width - pad + 8, cv.height - pad + 4);
  g.fillText("x", pad - 4, pad - 10);
  for (const [t, x, c] of pts) {
    const [px, py] = at(t, x);
    g.fillStyle = c.startsWith("-") ? "#c33" : "#237";
    g.beginPath();
    g.arc(px, py, 5, 0, 2 * Math.PI);
    g.fill();
    g.fillStyle = "#333";
    g.fillText(`${c === "1" ? "" : c}t^${t}x^${x}`, px + 7, py - 7);
  }
}

function drawStrip() {
  const out = $("st-out"), cv = $("st-canvas"), g = cv.getContext("2d");
  g.clearRect(0, 0, cv.width, cv.height);
  let d;
  try {
    d = JSON.parse(surgery_strip($("st-family").value, int("st-m"), int("st-n"), int("st-beta"), int("st-lo"), int("st-hi")));
  } catch (e) {
    return fail(out, e);
  }
  out.className = "out";
  const cw = cv.width / d.cells.length;
  d.cells.forEach((c, i) => {
    g.fillStyle = COLORS[c.kind];
    g.fillRect(i * cw, 0, Math.max(1, cw - 1), 40);
  });
  g.fillStyle = "#333";
  g.fillText(d.cells[0].alpha, 0, 55);
  g.fillText(d.cells[d.cells.length - 1].alpha, cv.width - 24, 55);
  cv.onmousemove = (ev) => {
    const c = d.cells[Math.floor(ev.offsetX / cw)];
    if (c) out.textContent = `alpha = ${c.alpha}/${d.beta}: ${c.headline}`;
  };
  const hits = d.cells.filter((c) => c.kind === "lens").map((c) => `${c.alpha}/${d.beta}: ${c.headline}`);
  out.textContent = hits.length ? hits.join("\n") : "no lens slopes in range";
}

function showNorms() {
  const out = $("nt-out");
  let d;
  try {
    d = JSON.parse(norm_table($("nt-poly").value, int("nt-n")));
  } catch (e) {
    return fail(out, e);
  }
  out.className = "";
  const rows = d.rows.map((r) => `<tr><td>${r.d}</td><td>${r.value}</td></tr>`).join("");
  out.innerHTML = `<div class="out">x(t) = ${d.poly}</div><table><tr><th>d</th><th>N_d</th></tr>${rows}</table>`;
}

await init();
$("ax-go").onclick = drawDiagram;
$("st-go").onclick = drawStrip;
$("nt-go").onclick = showNorms;
drawDiagram();
drawStrip();
showNorms();
