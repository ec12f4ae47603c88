#!/usr/bin/env node
/** CLI: mtsplace-figures render --csv <path> --kind <line|cdf> --out <path> */

import { SchemaError } from './csv.js';
import { render, type FigureKind } from './render.js';

const USAGE =
  'usage: mtsplace-figures render --csv <path> --kind <line|cdf> --out <path>';

export function main(argv: string[]): number {
  if (argv.length === 0 || argv[0] !== 'render') {
    console.error(USAGE);
    return 2;
  }
  const flags = new Map<string, string>();
  for (let i = 1; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith('--') || value === undefined) {
      console.error(USAGE);
      return 2;
    }
    flags.set(key.slice(2), value);
  }
  const csv = flags.get('csv');
  const kind = flags.get('kind');
  const out = flags.get('out');
  if (!csv || !out || (kind !== 'line' && kind !== 'cdf')) {
    console.error(USAGE);
    return 2;
  }
  try {
    render({ csvPath: csv, kind: kind as FigureKind, outPath: out });
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
    } else {
      console.error(`error: ${err instanceof Error ? err.message : err}`);
    }
    return 1;
  }
  console.log(`wrote ${out}`);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
