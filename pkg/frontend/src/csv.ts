/**
 * Parser for the benchmark CSV contract: one leading '#' metadata comment
 * line (key=value pairs), a header row, then numeric rows (except the
 * `solver` column of solve tables). LF endings, '.' decimals, UTF-8.
 */

export interface CsvTable {
  meta: Record<string, string>;
  columns: string[];
  /** column name -> numeric values (row order preserved) */
  data: Map<string, number[]>;
  rowCount: number;
}

export class CsvFormatError extends Error {}

export function parseCsv(text: string): CsvTable {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvFormatError("empty CSV");
  }
  const meta: Record<string, string> = {};
  let i = 0;
  while (i < lines.length && lines[i].startsWith("#")) {
    for (const token of lines[i].slice(1).trim().split(/\s+/)) {
      const eq = token.indexOf("=");
      if (eq > 0) {
        meta[token.slice(0, eq)] = token.slice(eq + 1);
      }
    }
    i += 1;
  }
  if (i >= lines.length) {
    throw new CsvFormatError("missing header row");
  }
  const columns = lines[i].split(",").map((c) => c.trim());
  if (columns.some((c) => c.length === 0)) {
    throw new CsvFormatError(`blank column name in header: ${lines[i]}`);
  }
  i += 1;
  const data = new Map<string, number[]>(columns.map((c) => [c, []]));
  let rowCount = 0;
  for (; i < lines.length; i += 1) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new CsvFormatError(
        `row ${rowCount + 1} has ${cells.length} cells, expected ${columns.length}`,
      );
    }
    columns.forEach((col, j) => {
      const value = Number(cells[j]);
      if (!Number.isFinite(value)) {
        throw new CsvFormatError(
          `row ${rowCount + 1}, column ${col}: not a finite number: ${cells[j]}`,
        );
      }
      data.get(col)!.push(value);
    });
    rowCount += 1;
  }
  if (rowCount === 0) {
    throw new CsvFormatError("no data rows");
  }
  return { meta, columns, data, rowCount };
}

/** Columns required for each figure kind; sweep_n solver columns are dynamic. */
export function requireColumns(table: CsvTable, required: string[]): void {
  const missing = required.filter((c) => !table.columns.includes(c));
  if (missing.length > 0) {
    throw new CsvFormatError(
      `missing required column(s): ${missing.join(", ")} (found: ${table.columns.join(", ")})`,
    );
  }
}
