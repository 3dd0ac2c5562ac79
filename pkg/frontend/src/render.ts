import { layoutFor } from "./layout.js";
import type { Foliage, GraphDocument } from "./types.js";

export interface RenderOptions {
  foliage?: Foliage | null;
  picks?: number[];
  width?: number;
  height?: number;
}

const FILL_DEFAULT = "#e8eef7";
const FILL_LEAF = "#a7e0a7";
const FILL_AXIL = "#f2c178";
const STROKE_TWIN = "#4169b8";

/**
 * Render a graph document to standalone SVG markup: one clickable node per
 * vertex (``data-vertex`` attribute), one line per edge. Foliage classes are
 * styled distinctly when given; picked vertices are outlined. Output is
 * deterministic: vertices ascending, edges sorted.
 */
export function renderGraph(doc: GraphDocument, opts: RenderOptions = {}): string {
  const width = opts.width ?? 520;
  const height = opts.height ?? 420;
  const open = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" data-graph>`;
  if (doc.v.length === 0) {
    return `${open}<text x="${width / 2}" y="${height / 2}" text-anchor="middle" class="empty">empty graph</text></svg>`;
  }
  const layout = layoutFor(doc, width, height);
  const parts: string[] = [open];

  const edges = [...doc.e]
    .map(([u, w]): [number, number] => (u < w ? [u, w] : [w, u]))
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  for (const [u, w] of edges) {
    const p = layout.get(u)!;
    const q = layout.get(w)!;
    parts.push(
      `<line x1="${fmt(p.x)}" y1="${fmt(p.y)}" x2="${fmt(q.x)}" y2="${fmt(q.y)}" ` +
        `stroke="#667" stroke-width="2" data-edge="${u}-${w}"/>`,
    );
  }

  const twinMembers = new Set((opts.foliage?.twins ?? []).flat());
  const picks = new Set(opts.picks ?? []);
  for (const v of [...doc.v].sort((a, b) => a - b)) {
    const p = layout.get(v)!;
    const classes = ["vertex"];
    let fill = FILL_DEFAULT;
    let stroke = "#445";
    let strokeWidth = 1.5;
    if (opts.foliage) {
      if (opts.foliage.leaves.includes(v)) {
        classes.push("leaf");
        fill = FILL_LEAF;
      }
      if (opts.foliage.axils.includes(v)) {
        classes.push("axil");
        if (fill === FILL_DEFAULT) fill = FILL_AXIL;
      }
      if (twinMembers.has(v)) {
        classes.push("twin");
        stroke = STROKE_TWIN;
        strokeWidth = 3;
      }
    }
    if (picks.has(v)) {
      classes.push("picked");
      stroke = "#c03030";
      strokeWidth = 3.5;
    }
    parts.push(
      `<g class="${classes.join(" ")}" data-vertex="${v}" cursor="pointer">` +
        `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="16" fill="${fill}" ` +
        `stroke="${stroke}" stroke-width="${strokeWidth}"/>` +
        `<text x="${fmt(p.x)}" y="${fmt(p.y)}" text-anchor="middle" dominant-baseline="central" ` +
        `font-size="13" pointer-events="none">${v}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function fmt(n: number): string {
  return n.toFixed(1);
}
