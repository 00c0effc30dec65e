/**
 * Deterministic SVG line charts: same input, byte-identical output.
 * Numbers are formatted with trimmed fixed precision; no timestamps, ids or
 * randomness anywhere in the markup.
 */

export interface Series {
  label: string;
  x: number[];
  y: number[];
  color: string;
}

export interface ChartOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  /** map data-x to axis position (e.g. Math.log2 for the N sweep) */
  xTransform?: (x: number) => number;
  /** tick labels shown at these data-x values (defaults to nice ticks) */
  xTicks?: number[];
}

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf",
];

const W = 860;
const H = 540;
const MARGIN = { left: 72, right: 180, top: 48, bottom: 56 };

function fmt(v: number): string {
  if (!Number.isFinite(v)) {
    throw new Error(`non-finite coordinate: ${v}`);
  }
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

function fmtTick(v: number): string {
  if (Number.isInteger(v)) return String(v);
  const s = v.toPrecision(6);
  return String(Number(s));
}

function niceTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) return [lo];
  const raw = (hi - lo) / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = (norm <= 1 ? 1 : norm <= 2 ? 2 : norm <= 5 ? 5 : 10) * mag;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return ticks;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderChart(series: Series[], opts: ChartOptions): string {
  if (series.length === 0) {
    throw new Error("nothing to plot: no series");
  }
  const tx = opts.xTransform ?? ((x: number) => x);
  const xsAll = series.flatMap((s) => s.x.map(tx));
  const ysAll = series.flatMap((s) => s.y);
  const xLo = Math.min(...xsAll);
  const xHi = Math.max(...xsAll);
  let yLo = Math.min(...ysAll, 0);
  let yHi = Math.max(...ysAll);
  if (yHi === yLo) yHi = yLo + 1;
  const plotW = W - MARGIN.left - MARGIN.right;
  const plotH = H - MARGIN.top - MARGIN.bottom;
  const px = (x: number) =>
    MARGIN.left + (xHi === xLo ? 0.5 : (tx(x) - xLo) / (xHi - xLo)) * plotW;
  const py = (y: number) => MARGIN.top + (1 - (y - yLo) / (yHi - yLo)) * plotH;

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}">`,
  );
  out.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  out.push(
    `<text x="${W / 2}" y="28" text-anchor="middle" font-family="sans-serif" font-size="17">${esc(opts.title)}</text>`,
  );

  // frame
  const x0 = MARGIN.left;
  const x1 = W - MARGIN.right;
  const y0 = MARGIN.top;
  const y1 = H - MARGIN.bottom;
  out.push(
    `<rect x="${x0}" y="${y0}" width="${plotW}" height="${plotH}" fill="none" stroke="#333" stroke-width="1"/>`,
  );

  // x ticks: either the supplied data values or nice ticks on the axis scale
  const xTickVals = opts.xTicks ?? niceTicks(xLo, xHi);
  for (const t of xTickVals) {
    const xpix = opts.xTicks ? px(t) : MARGIN.left + ((t - xLo) / (xHi - xLo)) * plotW;
    out.push(
      `<line x1="${fmt(xpix)}" y1="${y1}" x2="${fmt(xpix)}" y2="${y1 + 5}" stroke="#333"/>`,
      `<text x="${fmt(xpix)}" y="${y1 + 20}" text-anchor="middle" font-family="sans-serif" font-size="12">${fmtTick(t)}</text>`,
      `<line x1="${fmt(xpix)}" y1="${y0}" x2="${fmt(xpix)}" y2="${y1}" stroke="#ddd" stroke-width="0.5"/>`,
    );
  }
  for (const t of niceTicks(yLo, yHi)) {
    const ypix = py(t);
    out.push(
      `<line x1="${x0 - 5}" y1="${fmt(ypix)}" x2="${x0}" y2="${fmt(ypix)}" stroke="#333"/>`,
      `<text x="${x0 - 9}" y="${fmt(ypix + 4)}" text-anchor="end" font-family="sans-serif" font-size="12">${fmtTick(t)}</text>`,
      `<line x1="${x0}" y1="${fmt(ypix)}" x2="${x1}" y2="${fmt(ypix)}" stroke="#ddd" stroke-width="0.5"/>`,
    );
  }
  out.push(
    `<text x="${(x0 + x1) / 2}" y="${H - 14}" text-anchor="middle" font-family="sans-serif" font-size="14">${esc(opts.xLabel)}</text>`,
    `<text x="20" y="${(y0 + y1) / 2}" text-anchor="middle" font-family="sans-serif" font-size="14" transform="rotate(-90 20 ${(y0 + y1) / 2})">${esc(opts.yLabel)}</text>`,
  );

  // series, in input order (legend order == column order)
  series.forEach((s, idx) => {
    const pts = s.x.map((x, i) => `${fmt(px(x))},${fmt(py(s.y[i]))}`).join(" ");
    out.push(
      `<polyline points="${pts}" fill="none" stroke="${s.color}" stroke-width="1.8"/>`,
    );
    if (s.x.length <= 40) {
      s.x.forEach((x, i) => {
        out.push(
          `<circle cx="${fmt(px(x))}" cy="${fmt(py(s.y[i]))}" r="3" fill="${s.color}"/>`,
        );
      });
    }
    const ly = y0 + 16 + idx * 20;
    out.push(
      `<line x1="${x1 + 12}" y1="${ly - 4}" x2="${x1 + 40}" y2="${ly - 4}" stroke="${s.color}" stroke-width="2.5"/>`,
      `<text x="${x1 + 46}" y="${ly}" font-family="sans-serif" font-size="12">${esc(s.label)}</text>`,
    );
  });

  out.push("</svg>");
  return out.join("\n") + "\n";
}
