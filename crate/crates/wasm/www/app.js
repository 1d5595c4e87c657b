import init, { torus_tour, curling_extension, angelini_histogram } from "./pkg/hateful_wasm.js";

const $ = (id) => document.getElementById(id);

function call(fn, ...args) {
  const v = JSON.parse(fn(...args));
  if (v.error) throw new Error(v.error);
  return v;
}

function show(id, text, isError = false) {
  $(id).textContent = text;
  $(id).className = isError ? "err" : "";
}

function drawTour() {
  const canvas = $("tsp-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let t;
  try {
    t = call(torus_tour, Number($("tsp-n").value), BigInt($("tsp-seed").value), BigInt($("tsp-trial").value));
  } catch (e) {
    return show("tsp-info", e.message, true);
  }
  show("tsp-info", `length ${t.length.toFixed(5)} = ${t.length_eels.toFixed(4)} eels, order ${t.order.join(" ")}`);

  const s = canvas.width;
  ctx.strokeStyle = "#2a6";
  ctx.lineWidth = 2;
  // each hop takes the shortest wrapped displacement, so draw it from both ends
  for (let i = 0; i < t.order.length && t.order.length > 1; i++) {
    const [ax, ay] = t.points[t.order[i]];
    const [bx, by] = t.points[t.order[(i + 1) % t.order.length]];
    let dx = bx - ax, dy = by - ay;
    dx -= Math.round(dx);
    dy -= Math.round(dy);
    for (const [x, y, sx] of [[ax, ay, 1], [bx, by, -1]]) {
      ctx.beginPath();
      ctx.moveTo(x * s, y * s);
      ctx.lineTo((x + sx * dx) * s, (y + sx * dy) * s);
      ctx.stroke();
    }
  }
  ctx.fillStyle = "#124";
  t.points.forEach(([x, y], i) => {
    ctx.beginPath();
    ctx.arc(x * s, y * s, 4, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(String(i), x * s + 6, y * s - 6);
  });
}

function extend() {
  try {
    const r = call(curling_extension, $("curl-in").value);
    show("curl-info", `curling number ${r.curling_number}; a 1 follows after length ${r.tail_length}`);
    $("curl-out").textContent = r.extended.join(" ");
  } catch (e) {
    show("curl-info", e.message, true);
    $("curl-out").textContent = "";
  }
}

function histogram() {
  const canvas = $("ang-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let h;
  try {
    h = call(angelini_histogram, 1, Number($("ang-count").value));
  } catch (e) {
    return show("ang-info", e.message, true);
  }
  show("ang-info", `${h.histogram.length} distinct values; starts ${h.first_terms.slice(0, 20).join(", ")}, ...`);
  const maxValue = 26, pad = 24;
  const bw = (canvas.width - pad) / (maxValue + 1);
  const top = Math.max(...h.histogram.map((b) => b.frequency));
  ctx.font = "11px sans-serif";
  for (let v = 0; v <= maxValue; v++) {
    ctx.fillStyle = "#444";
    ctx.fillText(String(v), pad / 2 + v * bw + 2, canvas.height - 4);
  }
  ctx.fillStyle = "#36a";
  for (const { value, frequency } of h.histogram) {
    const bh = (frequency / top) * (canvas.height - 40);
    ctx.fillRect(pad / 2 + value * bw + 1, canvas.height - 18 - bh, bw - 2, bh);
  }
}

await init();
show("status", "Ready.");
$("tsp-go").onclick = drawTour;
$("tsp-next").onclick = () => {
  $("tsp-trial").value = Number($("tsp-trial").value) + 1;
  drawTour();
};
$("curl-go").onclick = extend;
$("ang-go").onclick = histogram;
drawTour();
extend();
histogram();
