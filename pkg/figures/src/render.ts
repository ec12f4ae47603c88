/** Headless SVG rendering of experiment figures. */

import { readFileSync, writeFileSync } from 'node:fs';
import * as echarts from 'echarts';

import { parseRecords, type TrialRecord } from './csv.js';
import { cdfSeries, lineSeries, type Series } from './series.js';

export type FigureKind = 'line' | 'cdf';

export interface FigureSpec {
  csvPath: string;
  kind: FigureKind;
  outPath: string;
  width?: number;
  height?: number;
}

export interface RenderResult {
  /** The exact data series that were plotted, keyed by method. */
  series: Map<string, Series>;
  outPath: string;
}

function buildOption(kind: FigureKind, sweepVar: string, series: Map<string, Series>) {
  const methods = [...series.keys()];
  const isLine = kind === 'line';
  return {
    animation: false,
    legend: { data: methods, top: 8 },
    grid: { left: 70, right: 30, top: 44, bottom: 56 },
    xAxis: {
      type: 'value' as const,
      name: isLine ? `sweep value (${sweepVar || 'n/a'})` : 'SNR boost (dB)',
      nameLocation: 'middle' as const,
      nameGap: 32,
      scale: true,
    },
    yAxis: {
      type: 'value' as const,
      name: isLine ? 'mean SNR boost (dB)' : 'cumulative fraction',
      nameLocation: 'middle' as const,
      nameGap: 48,
      scale: isLine,
    },
    series: methods.map((method) => ({
      name: method,
      type: 'line' as const,
      data: series.get(method)!.x.map((x, i) => [x, series.get(method)!.y[i]]),
      showSymbol: true,
      symbolSize: isLine ? 8 : 0,
      step: false,
    })),
  };
}

/** Render one figure from a CSV file; returns the plotted series. */
export function render(spec: FigureSpec): RenderResult {
  const text = readFileSync(spec.csvPath, 'utf8');
  const records: TrialRecord[] = parseRecords(text);
  const series = spec.kind === 'line' ? lineSeries(records) : cdfSeries(records);
  const sweepVar = records.length > 0 ? records[0].sweepVar : '';

  const chart = echarts.init(null, null, {
    renderer: 'svg',
    ssr: true,
    width: spec.width ?? 800,
    height: spec.height ?? 520,
  });
  chart.setOption(buildOption(spec.kind, sweepVar, series));
  const svg = chart.renderToSVGString();
  chart.dispose();
  writeFileSync(spec.outPath, svg);
  return { series, outPath: spec.outPath };
}
