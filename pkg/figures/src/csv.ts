/**
 * Reader for the experiment CSV emitted by the placement harness.
 *
 * Schema: sweep_var,sweep_value,method,trial,boost_db,solve_seconds
 * (plain comma-separated text, no quoting).
 */

export const REQUIRED_COLUMNS = [
  'sweep_var',
  'sweep_value',
  'method',
  'trial',
  'boost_db',
  'solve_seconds',
] as const;

export interface TrialRecord {
  sweepVar: string;
  sweepValue: number;
  method: string;
  trial: number;
  boostDb: number;
  solveSeconds: number;
}

export class SchemaError extends Error {}

export function parseRecords(text: string): TrialRecord[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== '');
  if (lines.length === 0) {
    throw new SchemaError('CSV is empty: missing header row');
  }
  const header = lines[0].split(',').map((h) => h.trim());
  const index = new Map(header.map((name, i) => [name, i]));
  for (const column of REQUIRED_COLUMNS) {
    if (!index.has(column)) {
      throw new SchemaError(`CSV is missing required column "${column}"`);
    }
  }
  const col = (row: string[], name: string) => row[index.get(name)!];
  const records: TrialRecord[] = [];
  for (let i = 1; i < lines.length; i++) {
    const row = lines[i].split(',');
    if (row.length < header.length) {
      throw new SchemaError(`row ${i + 1} has ${row.length} fields, expected ${header.length}`);
    }
    const num = (name: string): number => {
      const v = Number(col(row, name));
      if (!Number.isFinite(v)) {
        throw new SchemaError(`row ${i + 1}: column "${name}" is not a finite number`);
      }
      return v;
    };
    records.push({
      sweepVar: col(row, 'sweep_var'),
      sweepValue: num('sweep_value'),
      method: col(row, 'method'),
      trial: num('trial'),
      boostDb: num('boost_db'),
      solveSeconds: num('solve_seconds'),
    });
  }
  return records;
}
