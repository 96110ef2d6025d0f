// Parsers for the two CSV tables the pctorus CLI emits:
//
//   loci:  label,kind,arg_aJ,arg_aK      (angle cells blank when undefined)
//   path:  t,arg_aJ,arg_aK
//
// Headers carry the coefficient indices (arg_a3, arg_a5, ...); we keep them
// so axis labels match whatever selection produced the file.

export type LocusKind = "point" | "circle_free_j" | "circle_free_k" | "full_torus";

export interface Locus {
  label: string;
  kind: LocusKind;
  angleJ: number | null;
  angleK: number | null;
}

export interface LociTable {
  headerJ: string;
  headerK: string;
  loci: Locus[];
}

export interface PathSample {
  t: number;
  angleJ: number;
  angleK: number;
}

export interface PathTable {
  headerJ: string;
  headerK: string;
  samples: PathSample[];
}

const KINDS = new Set(["point", "circle_free_j", "circle_free_k", "full_torus"]);

function rows(text: string): string[][] {
  return text
    .split(/\r?\n/)
    .filter((line) => line.length > 0 && !line.startsWith("#"))
    .map((line) => line.split(","));
}

function angle(cell: string): number | null {
  if (cell === "") return null;
  const x = Number(cell);
  if (!Number.isFinite(x)) throw new Error(`bad angle cell: ${JSON.stringify(cell)}`);
  return x;
}

export function parseLoci(text: string): LociTable {
  const [header, ...body] = rows(text);
  if (!header || header.length !== 4 || header[0] !== "label") {
    throw new Error("expected a loci table with header label,kind,arg_aJ,arg_aK");
  }
  const loci = body.map((cells, i) => {
    if (cells.length !== 4) throw new Error(`row ${i + 2}: expected 4 cells`);
    const kind = cells[1];
    if (!KINDS.has(kind)) throw new Error(`row ${i + 2}: unknown kind ${kind}`);
    return {
      label: cells[0],
      kind: kind as LocusKind,
      angleJ: angle(cells[2]),
      angleK: angle(cells[3]),
    };
  });
  return { headerJ: header[2], headerK: header[3], loci };
}

export function parsePath(text: string): PathTable {
  const [header, ...body] = rows(text);
  if (!header || header.length !== 3 || header[0] !== "t") {
    throw new Error("expected a path table with header t,arg_aJ,arg_aK");
  }
  const samples = body.map((cells, i) => {
    if (cells.length !== 3) throw new Error(`row ${i + 2}: expected 3 cells`);
    const [t, j, k] = cells.map((c) => angle(c));
    if (t === null || j === null || k === null) {
      throw new Error(`row ${i + 2}: blank cell in path table`);
    }
    return { t, angleJ: j, angleK: k };
  });
  return { headerJ: header[1], headerK: header[2], samples };
}
