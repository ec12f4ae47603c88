/** Data reductions behind the two figure kinds. */

import type { TrialRecord } from './csv.js';

export interface Series {
  /** x values (sweep values for lines, boost for CDFs), ascending. */
  x: number[];
  /** y values aligned with x (mean boost for lines, cumulative fraction). */
  y: number[];
}

function mean(values: number[]): number {
  let sum = 0;
  for (const v of values) sum += v;
  return sum / values.length;
}

/** Mean boost per sweep value, one series per method (insertion order). */
export function lineSeries(records: TrialRecord[]): Map<string, Series> {
  const buckets = new Map<string, Map<number, number[]>>();
  for (const r of records) {
    let byValue = buckets.get(r.method);
    if (!byValue) {
      byValue = new Map();
      buckets.set(r.method, byValue);
    }
    let cell = byValue.get(r.sweepValue);
    if (!cell) {
      cell = [];
      byValue.set(r.sweepValue, cell);
    }
    cell.push(r.boostDb);
  }
  const out = new Map<string, Series>();
  for (const [method, byValue] of buckets) {
    const xs = [...byValue.keys()].sort((a, b) => a - b);
    out.set(method, { x: xs, y: xs.map((x) => mean(byValue.get(x)!)) });
  }
  return out;
}

/**
 * Empirical CDF as a step function: for each distinct value a riser from the
 * fraction below it to the fraction at-or-below it.  A constant sample
 * collapses to the single step (v, 0) -> (v, 1).
 */
export function cdfSteps(values: number[]): Series {
  const sorted = [...values].sort((a, b) => a - b);
  const n = sorted.length;
  const x: number[] = [];
  const y: number[] = [];
  let i = 0;
  while (i < n) {
    let j = i;
    while (j < n && sorted[j] === sorted[i]) j++;
    x.push(sorted[i], sorted[i]);
    y.push(i / n, j / n);
    i = j;
  }
  return { x, y };
}

/** Per-method empirical CDF of the boost column. */
export function cdfSeries(records: TrialRecord[]): Map<string, Series> {
  const buckets = new Map<string, number[]>();
  for (const r of records) {
    let cell = buckets.get(r.method);
    if (!cell) {
      cell = [];
      buckets.set(r.method, cell);
    }
    cell.push(r.boostDb);
  }
  const out = new Map<string, Series>();
  for (const [method, values] of buckets) {
    out.set(method, cdfSteps(values));
  }
  return out;
}
