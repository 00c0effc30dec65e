#!/usr/bin/env node
/**
 * Batch figure regeneration:
 *   airpa-figures --in sweep_n.csv --out sweep_n.svg --kind sweep_n
 */

import { readFileSync, writeFileSync } from "fs";
import { FigureKind, render } from "./render";

const KINDS: FigureKind[] = ["curve", "sweep_k", "sweep_n"];

function parseArgs(argv: string[]): { input: string; output: string; kind: FigureKind } {
  let input = "";
  let output = "";
  let kind = "";
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) {
      throw new Error(`missing value for ${flag}`);
    }
    if (flag === "--in") input = value;
    else if (flag === "--out") output = value;
    else if (flag === "--kind") kind = value;
    else throw new Error(`unknown flag: ${flag}`);
  }
  if (!input || !output || !kind) {
    throw new Error("usage: airpa-figures --in <csv> --out <svg> --kind <curve|sweep_k|sweep_n>");
  }
  if (!KINDS.includes(kind as FigureKind)) {
    throw new Error(`unknown kind ${kind}; expected one of ${KINDS.join(", ")}`);
  }
  return { input, output, kind: kind as FigureKind };
}

export function main(argv: string[]): number {
  try {
    const { input, output, kind } = parseArgs(argv);
    const csvText = readFileSync(input, "utf-8");
    const svg = render({ kind, csvText });
    writeFileSync(output, svg, "utf-8");
    console.log(`wrote ${output}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
