import type { LociTable, Locus, PathSample, PathTable } from "./csv.js";

// One fundamental domain (-pi, pi]^2 of the torus, x = first selected
// coefficient's phase, y = second. Paths are drawn as polylines split at
// wrap-arounds so no drawn segment corresponds to an angle jump > pi.

export const WIDTH = 640;
export const HEIGHT = 640;
export const MARGIN = 48;

const PI = Math.PI;

export function xOf(angle: number): number {
  return MARGIN + ((angle + PI) / (2 * PI)) * (WIDTH - 2 * MARGIN);
}

export function yOf(angle: number): number {
  return HEIGHT - MARGIN - ((angle + PI) / (2 * PI)) * (HEIGHT - 2 * MARGIN);
}

export function colorFor(label: string): string {
  if (label.endsWith("maj")) return "#d62728";
  if (label.endsWith("min")) return "#1f77b4";
  if (label.endsWith("dim")) return "#2ca02c";
  if (label.endsWith("aug")) return "#000000";
  return "#7f7f7f";
}

/** Split a path at torus wrap-arounds: break wherever either coordinate
 * jumps by more than pi between consecutive samples. */
export function splitAtWraps(samples: PathSample[]): PathSample[][] {
  const runs: PathSample[][] = [];
  let run: PathSample[] = [];
  for (const s of samples) {
    const prev = run[run.length - 1];
    if (
      prev &&
      (Math.abs(s.angleJ - prev.angleJ) > PI || Math.abs(s.angleK - prev.angleK) > PI)
    ) {
      runs.push(run);
      run = [];
    }
    run.push(s);
  }
  if (run.length > 0) runs.push(run);
  return runs;
}

const fmt = (x: number) => x.toFixed(2);

function locusMarkup(locus: Locus): string {
  const color = colorFor(locus.label);
  switch (locus.kind) {
    case "point": {
      const cx = fmt(xOf(locus.angleJ as number));
      const cy = fmt(yOf(locus.angleK as number));
      return (
        `<circle class="locus" cx="${cx}" cy="${cy}" r="4" fill="${color}">` +
        `<title>${locus.label}</title></circle>`
      );
    }
    case "circle_free_k": {
      // y is free: the locus is a vertical line across the whole domain
      const x = fmt(xOf(locus.angleJ as number));
      return (
        `<line class="locus" x1="${x}" y1="${fmt(yOf(PI))}" x2="${x}" ` +
        `y2="${fmt(yOf(-PI))}" stroke="${color}" stroke-width="1.5">` +
        `<title>${locus.label}</title></line>`
      );
    }
    case "circle_free_j": {
      const y = fmt(yOf(locus.angleK as number));
      return (
        `<line class="locus" x1="${fmt(xOf(-PI))}" y1="${y}" ` +
        `x2="${fmt(xOf(PI))}" y2="${y}" stroke="${color}" stroke-width="1.5">` +
        `<title>${locus.label}</title></line>`
      );
    }
    case "full_torus": {
      const x0 = fmt(xOf(-PI));
      const y0 = fmt(yOf(PI));
      const w = fmt(xOf(PI) - xOf(-PI));
      const h = fmt(yOf(-PI) - yOf(PI));
      return (
        `<rect class="locus" x="${x0}" y="${y0}" width="${w}" height="${h}" ` +
        `fill="${colorFor(locus.label)}" fill-opacity="0.08">` +
        `<title>${locus.label}</title></rect>`
      );
    }
  }
}

function pathMarkup(table: PathTable, color: string): string {
  return splitAtWraps(table.samples)
    .filter((run) => run.length >= 2)
    .map((run) => {
      const pts = run
        .map((s) => `${fmt(xOf(s.angleJ))},${fmt(yOf(s.angleK))}`)
        .join(" ");
      return `<polyline class="path" points="${pts}" fill="none" stroke="${color}" stroke-width="1"/>`;
    })
    .join("\n");
}

const PATH_COLORS = ["#9467bd", "#8c564b", "#e377c2", "#17becf"];

export function renderSvg(lociTables: LociTable[], pathTables: PathTable[]): string {
  const first = lociTables[0] ?? pathTables[0];
  const labelX = first ? first.headerJ : "arg_aj";
  const labelY = first ? first.headerK : "arg_ak";
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `<rect x="${MARGIN}" y="${MARGIN}" width="${WIDTH - 2 * MARGIN}" height="${HEIGHT - 2 * MARGIN}" fill="none" stroke="#cccccc"/>`,
    `<text x="${WIDTH / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="12">${labelX}</text>`,
    `<text x="14" y="${HEIGHT / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 14 ${HEIGHT / 2})">${labelY}</text>`,
  ];
  pathTables.forEach((table, i) => {
    parts.push(pathMarkup(table, PATH_COLORS[i % PATH_COLORS.length]));
  });
  for (const table of lociTables) {
    for (const locus of table.loci) parts.push(locusMarkup(locus));
  }
  parts.push("</svg>");
  return parts.join("\n");
}
