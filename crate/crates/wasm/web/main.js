import init, { analyze, lattice_points, ehrhart_table } from "./pkg/ehrlatt_wasm.js";

const PRESETS = {
  "pentagon": "2 5\n0 0\n2 0\n3 2\n1 3\n-1 1\n",
  "unit square": "2 4\n0 0\n1 0\n0 1\n1 1\n",
  "reflexive hexagon": "2 6\n1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n",
  "Fano, not reflexive": "2 3\n1 0\n0 1\n-1 -3\n",
  "thin triangle": "2 3\n0 0\n5 2\n2 1\n",
  "octahedron (3D, no picture)": "3 6\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n",
};

const $ = (id) => document.getElementById(id);

function fill(table, rows, header) {
  table.replaceChildren();
  if (header) {
    const tr = table.insertRow();
    for (const h of header) {
      const th = document.createElement("th");
      th.textContent = h;
      tr.appendChild(th);
    }
  }
  for (const row of rows) {
    const tr = table.insertRow();
    row.forEach((cell, i) => {
      const td = tr.insertCell();
      if (i > 0 || !header) td.className = "num";
      if (cell instanceof Node) td.appendChild(cell); else td.textContent = cell;
    });
  }
}

function verdict(ok, yes, no) {
  const s = document.createElement("span");
  s.className = ok ? "ok" : "bad";
  s.textContent = ok ? yes : no;
  return s;
}

function showAnalysis(a) {
  fill($("analysis"), [
    ["dimension", String(a.d)],
    ["vertices", a.vertices.join(" ")],
    ["facets", String(a.facets.length)],
    ["lattice points", `${a.total} (${a.interior} interior, ${a.boundary} boundary)`],
    ["Ehrhart polynomial", a.polynomial],
    ["volume", a.volume],
    ["surface (determinants)", a.surface_det],
    ["surface (2 e_{d-1})", a.surface_ehrhart],
    ["surface (facets)", a.surface_direct],
    ["routes agree", verdict(a.agree, "yes", "NO")],
    ["Fano", a.fano ? "yes" : "no"],
    ["reflexive", a.reflexive ? "yes" : "no"],
    ...(a.dropped.length ? [["dropped points", a.dropped.join(" ")]] : []),
  ]);
}

function draw(pic) {
  const canvas = $("picture");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const xs = pic.outline.map((v) => v[0]), ys = pic.outline.map((v) => v[1]);
  const [x0, x1, y0, y1] = [Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys)];
  const pad = 24;
  const scale = Math.min((canvas.width - 2 * pad) / Math.max(1, x1 - x0), (canvas.height - 2 * pad) / Math.max(1, y1 - y0));
  const X = (x) => pad + (x - x0) * scale;
  const Y = (y) => canvas.height - pad - (y - y0) * scale;

  ctx.strokeStyle = "#eee";
  for (let x = x0; x <= x1; x++) { ctx.beginPath(); ctx.moveTo(X(x), Y(y0)); ctx.lineTo(X(x), Y(y1)); ctx.stroke(); }
  for (let y = y0; y <= y1; y++) { ctx.beginPath(); ctx.moveTo(X(x0), Y(y)); ctx.lineTo(X(x1), Y(y)); ctx.stroke(); }

  ctx.beginPath();
  pic.outline.forEach(([x, y], i) => (i ? ctx.lineTo(X(x), Y(y)) : ctx.moveTo(X(x), Y(y))));
  ctx.closePath();
  ctx.fillStyle = "rgba(28, 126, 214, 0.08)";
  ctx.fill();
  ctx.strokeStyle = "#444";
  ctx.lineWidth = 1.5;
  ctx.stroke();
  ctx.lineWidth = 1;

  const r = Math.max(1.5, Math.min(5, scale / 5));
  for (const p of pic.points) {
    ctx.beginPath();
    ctx.arc(X(p.x), Y(p.y), r, 0, 2 * Math.PI);
    ctx.fillStyle = p.boundary ? "#d9480f" : "#1c7ed6";
    ctx.fill();
  }
}

function refreshPicture() {
  const k = Number($("k").value);
  $("kval").textContent = k;
  $("picnote").textContent = "";
  try {
    draw(JSON.parse(lattice_points($("input").value, k)));
  } catch (e) {
    const canvas = $("picture");
    canvas.getContext("2d").clearRect(0, 0, canvas.width, canvas.height);
    $("picnote").textContent = String(e);
  }
}

function run() {
  $("error").textContent = "";
  try {
    showAnalysis(JSON.parse(analyze($("input").value)));
    const rows = JSON.parse(ehrhart_table($("input").value, 6));
    fill($("table"), rows.map((r) => [String(r.k), r.count, r.polynomial, r.interior, r.boundary, r.polynomial_at_minus_k]),
      ["k", "G(kP)", "E(k)", "interior", "boundary", "E(-k)"]);
  } catch (e) {
    $("analysis").replaceChildren();
    $("table").replaceChildren();
    $("error").textContent = String(e);
  }
  refreshPicture();
}

await init();
for (const name of Object.keys(PRESETS)) $("preset").add(new Option(name, name));
$("preset").addEventListener("change", () => { $("input").value = PRESETS[$("preset").value]; run(); });
$("k").addEventListener("input", refreshPicture);
$("run").addEventListener("click", run);
$("input").value = PRESETS["pentagon"];
run();
