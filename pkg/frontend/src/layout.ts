import type { GraphDocument } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;

/**
 * Ring- and line-shaped documents (every edge joins label-consecutive
 * survivors, plus at most the wrap-around pair) get the circular layout by
 * label order, matching how those topologies are usually drawn. Anything
 * else falls back to a deterministic force-directed embedding.
 */
export function isChainLike(doc: GraphDocument): boolean {
  const labels = [...doc.v].sort((a, b) => a - b);
  if (labels.length < 3) return true;
  const allowed = new Set<string>();
  for (let i = 0; i + 1 < labels.length; i++) {
    allowed.add(`${labels[i]}-${labels[i + 1]}`);
  }
  allowed.add(`${labels[0]}-${labels[labels.length - 1]}`);
  return doc.e.every(([u, w]) => allowed.has(u < w ? `${u}-${w}` : `${w}-${u}`));
}

export function circularLayout(labels: number[], width: number, height: number): Layout {
  const sorted = [...labels].sort((a, b) => a - b);
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) * 0.38;
  const layout: Layout = new Map();
  sorted.forEach((label, i) => {
    const angle = (2 * Math.PI * i) / sorted.length - Math.PI / 2;
    layout.set(label, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  });
  return layout;
}

/** Spring embedding with no randomness: circle start, fixed iteration count. */
export function forceLayout(
  doc: GraphDocument,
  width: number,
  height: number,
  iterations = 150,
): Layout {
  const layout = circularLayout(doc.v, width, height);
  const labels = [...doc.v].sort((a, b) => a - b);
  if (labels.length < 3) return layout;
  const ideal = (Math.min(width, height) * 0.8) / Math.sqrt(labels.length);
  const adjacent = new Set(doc.e.map(([u, w]) => (u < w ? `${u}-${w}` : `${w}-${u}`)));
  for (let it = 0; it < iterations; it++) {
    const step = 0.05 * (1 - it / iterations) * ideal;
    for (const a of labels) {
      let fx = 0;
      let fy = 0;
      const pa = layout.get(a)!;
      for (const b of labels) {
        if (a === b) continue;
        const pb = layout.get(b)!;
        const dx = pa.x - pb.x;
        const dy = pa.y - pb.y;
        const d = Math.max(Math.hypot(dx, dy), 1e-3);
        const repel = (ideal * ideal) / d;
        fx += (dx / d) * repel;
        fy += (dy / d) * repel;
        if (adjacent.has(a < b ? `${a}-${b}` : `${b}-${a}`)) {
          const attract = (d * d) / ideal;
          fx -= (dx / d) * attract;
          fy -= (dy / d) * attract;
        }
      }
      const f = Math.max(Math.hypot(fx, fy), 1e-3);
      layout.set(a, {
        x: Math.min(width - 20, Math.max(20, pa.x + (fx / f) * Math.min(f, step))),
        y: Math.min(height - 20, Math.max(20, pa.y + (fy / f) * Math.min(f, step))),
      });
    }
  }
  return layout;
}

export function layoutFor(doc: GraphDocument, width: number, height: number): Layout {
  return isChainLike(doc) ? circularLayout(doc.v, width, height) : forceLayout(doc, width, height);
}
