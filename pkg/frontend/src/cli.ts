import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";
import { parseLoci, parsePath } from "./csv.js";
import { renderSvg } from "./svg.js";

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs({
      args: argv,
      options: {
        loci: { type: "string", multiple: true, default: [] },
        paths: { type: "string", multiple: true, default: [] },
        out: { type: "string" },
      },
    });
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 1;
  }
  const { loci = [], paths = [], out } = args.values;
  if (loci.length === 0 && paths.length === 0) {
    console.error("usage: render --loci FILE [--loci FILE ...] [--paths FILE ...] [--out FILE]");
    return 1;
  }
  try {
    const lociTables = loci.map((f) => parseLoci(readFileSync(f, "utf8")));
    const pathTables = paths.map((f) => parsePath(readFileSync(f, "utf8")));
    const svg = renderSvg(lociTables, pathTables);
    if (out) writeFileSync(out, svg);
    else process.stdout.write(svg);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
