import { describe, expect, it } from 'vitest';

import { parseRecords, SchemaError } from '../src/csv.js';
import { cdfSteps, lineSeries, cdfSeries } from '../src/series.js';

const HEADER = 'sweep_var,sweep_value,method,trial,boost_db,solve_seconds';

function makeCsv(rows: Array<[string, number, string, number, number, number]>) {
  return [HEADER, ...rows.map((r) => r.join(','))].join('\n') + '\n';
}

describe('parseRecords', () => {
  it('parses harness rows', () => {
    const records = parseRecords(
      makeCsv([
        ['M', 10, 'proposed', 0, 1.5, 0.001],
        ['M', 10, 'fix', 0, 0.1, 0.0001],
      ]),
    );
    expect(records).toHaveLength(2);
    expect(records[0]).toEqual({
      sweepVar: 'M',
      sweepValue: 10,
      method: 'proposed',
      trial: 0,
      boostDb: 1.5,
      solveSeconds: 0.001,
    });
  });

  it('accepts a header-only file', () => {
    expect(parseRecords(HEADER + '\n')).toEqual([]);
  });

  it('names the missing column', () => {
    const bad = 'sweep_var,sweep_value,method,trial,solve_seconds\nM,1,fix,0,0.1\n';
    expect(() => parseRecords(bad)).toThrow(SchemaError);
    expect(() => parseRecords(bad)).toThrow(/boost_db/);
  });

  it('rejects non-numeric cells', () => {
    expect(() =>
      parseRecords(HEADER + '\nM,10,fix,0,loud,0.1\n'),
    ).toThrow(/boost_db/);
  });
});

describe('lineSeries', () => {
  it('computes per-method means over sorted sweep values', () => {
    const records = parseRecords(
      makeCsv([
        ['M', 30, 'proposed', 0, 4.0, 0],
        ['M', 30, 'proposed', 1, 2.0, 0],
        ['M', 10, 'proposed', 0, 1.0, 0],
        ['M', 10, 'fix', 0, 0.5, 0],
        ['M', 30, 'fix', 0, -0.5, 0],
      ]),
    );
    const series = lineSeries(records);
    expect([...series.keys()]).toEqual(['proposed', 'fix']);
    expect(series.get('proposed')).toEqual({ x: [10, 30], y: [1.0, 3.0] });
    expect(series.get('fix')).toEqual({ x: [10, 30], y: [0.5, -0.5] });
  });

  it('means equal an independent summation exactly', () => {
    const rows: Array<[string, number, string, number, number, number]> = [];
    let v = 0.1;
    for (const value of [10, 30, 50]) {
      for (const method of ['proposed', 'cmp', 'rmp', 'fix']) {
        for (let trial = 0; trial < 7; trial++) {
          v = (v * 1.37 + 0.11) % 5;
          rows.push(['M', value, method, trial, v, 0.001]);
        }
      }
    }
    const records = parseRecords(makeCsv(rows));
    const series = lineSeries(records);
    for (const method of ['proposed', 'cmp', 'rmp', 'fix']) {
      for (const value of [10, 30, 50]) {
        let sum = 0;
        let count = 0;
        for (const r of records) {
          if (r.method === method && r.sweepValue === value) {
            sum += r.boostDb;
            count += 1;
          }
        }
        const s = series.get(method)!;
        expect(s.y[s.x.indexOf(value)]).toBe(sum / count);
      }
    }
  });
});

describe('cdfSteps', () => {
  it('constant sample is a single step', () => {
    const s = cdfSteps([2.5, 2.5, 2.5, 2.5]);
    expect(s).toEqual({ x: [2.5, 2.5], y: [0, 1] });
  });

  it('rises from 0 to 1 over sorted values', () => {
    const s = cdfSteps([3, 1, 2]);
    expect(s.x).toEqual([1, 1, 2, 2, 3, 3]);
    expect(s.y).toEqual([0, 1 / 3, 1 / 3, 2 / 3, 2 / 3, 1]);
  });

  it('merges ties into one riser', () => {
    const s = cdfSteps([1, 1, 4]);
    expect(s.x).toEqual([1, 1, 4, 4]);
    expect(s.y).toEqual([0, 2 / 3, 2 / 3, 1]);
  });
});

describe('cdfSeries', () => {
  it('splits by method', () => {
    const records = parseRecords(
      makeCsv([
        ['M', 30, 'proposed', 0, 1.0, 0],
        ['M', 30, 'proposed', 1, 3.0, 0],
        ['M', 30, 'fix', 0, 0.0, 0],
      ]),
    );
    const series = cdfSeries(records);
    expect(series.get('proposed')!.x).toEqual([1, 1, 3, 3]);
    expect(series.get('fix')).toEqual({ x: [0, 0], y: [0, 1] });
  });
});
