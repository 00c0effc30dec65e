/**
 * Figure assembly per kind, mapping the benchmark CSV contract onto charts:
 *   curve:   rate vs beta, original plus the two surrogate orders
 *   sweep_k: multi-start convergence toward the exhaustive-search reference
 *   sweep_n: per-solver rate vs surface size, x log2-scaled (powers of two)
 */

import { CsvFormatError, CsvTable, parseCsv, requireColumns } from "./csv";
import { PALETTE, renderChart, Series } from "./svg";

export type FigureKind = "curve" | "sweep_k" | "sweep_n";

export interface FigureSpec {
  kind: FigureKind;
  csvText: string;
  xLabel?: string;
  yLabel?: string;
  title?: string;
}

const CURVE_COLUMNS = [
  "beta",
  "rate_original",
  "rate_surrogate_order1",
  "rate_surrogate_order3",
];

const SWEEP_K_COLUMNS = ["K", "mean_rate_esmpi_ga", "mean_rate_es"];

function seriesFrom(table: CsvTable, xCol: string, yCols: string[],
                    labels?: string[]): Series[] {
  const x = table.data.get(xCol)!;
  return yCols.map((col, i) => ({
    label: labels ? labels[i] : col,
    x,
    y: table.data.get(col)!,
    color: PALETTE[i % PALETTE.length],
  }));
}

export function render(spec: FigureSpec): string {
  const table = parseCsv(spec.csvText);
  switch (spec.kind) {
    case "curve": {
      requireColumns(table, CURVE_COLUMNS);
      const series = seriesFrom(table, "beta", CURVE_COLUMNS.slice(1), [
        "original",
        "surrogate (order 1)",
        "surrogate (order 3)",
      ]);
      return renderChart(series, {
        title: spec.title ?? "Achievable rate versus power-allocation factor",
        xLabel: spec.xLabel ?? "power-allocation factor beta",
        yLabel: spec.yLabel ?? "achievable rate (bits/s/Hz)",
      });
    }
    case "sweep_k": {
      requireColumns(table, SWEEP_K_COLUMNS);
      const series = seriesFrom(table, "K", SWEEP_K_COLUMNS.slice(1), [
        "ESMPI-GA",
        "ES reference",
      ]);
      return renderChart(series, {
        title: spec.title ?? "Achievable rate versus initialization count",
        xLabel: spec.xLabel ?? "initialization points K",
        yLabel: spec.yLabel ?? "mean achievable rate (bits/s/Hz)",
      });
    }
    case "sweep_n": {
      requireColumns(table, ["N"]);
      const solverCols = table.columns.filter((c) => c.startsWith("mean_rate_"));
      if (solverCols.length === 0) {
        throw new CsvFormatError(
          `no mean_rate_* solver columns found (found: ${table.columns.join(", ")})`,
        );
      }
      const labels = solverCols.map((c) =>
        c.replace("mean_rate_", "").replace(/_/g, "-").toUpperCase(),
      );
      const series = seriesFrom(table, "N", solverCols, labels);
      return renderChart(series, {
        title: spec.title ?? "Achievable rate versus surface size",
        xLabel: spec.xLabel ?? "reflecting elements N (log2 scale)",
        yLabel: spec.yLabel ?? "mean achievable rate (bits/s/Hz)",
        xTransform: Math.log2,
        xTicks: table.data.get("N")!,
      });
    }
    default: {
      const bad: never = spec.kind;
      throw new CsvFormatError(`unknown figure kind: ${bad}`);
    }
  }
}
