import { describe, expect, it } from "vitest";

import { renderGraph } from "../src/render.js";
import type { GraphDocument } from "../src/types.js";

const ring6: GraphDocument = {
  version: 1,
  v: [1, 2, 3, 4, 5, 6],
  e: [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]],
};

function vertexIds(svg: string): number[] {
  return [...svg.matchAll(/data-vertex="(\d+)"/g)].map((m) => Number(m[1]));
}

describe("renderGraph", () => {
  it("renders one clickable node per vertex and one line per edge", () => {
    const svg = renderGraph(ring6);
    expect(vertexIds(svg)).toEqual([1, 2, 3, 4, 5, 6]);
    expect(svg.match(/<line /g)).toHaveLength(6);
    expect(svg).toContain('cursor="pointer"');
  });

  it("keeps survivor labels after a measurement", () => {
    // the ring on 2..6 the service returns after Y at 1
    const r5: GraphDocument = {
      version: 1,
      v: [2, 3, 4, 5, 6],
      e: [[2, 3], [2, 6], [3, 4], [4, 5], [5, 6]],
    };
    const svg = renderGraph(r5);
    expect(vertexIds(svg)).toEqual([2, 3, 4, 5, 6]);
    expect(svg).not.toContain('data-vertex="1"');
  });

  it("styles foliage classes distinctly", () => {
    const l3: GraphDocument = { version: 1, v: [1, 2, 3], e: [[1, 2], [2, 3]] };
    const svg = renderGraph(l3, {
      foliage: { leaves: [1, 3], axils: [2], twins: [[1, 3]] },
    });
    expect(svg).toContain('class="vertex leaf twin"');
    expect(svg).toContain('class="vertex axil"');
    const leafFill = svg.match(/class="vertex leaf twin"[^>]*><circle[^>]*fill="([^"]+)"/)?.[1];
    const axilFill = svg.match(/class="vertex axil"[^>]*><circle[^>]*fill="([^"]+)"/)?.[1];
    expect(leafFill).toBeDefined();
    expect(leafFill).not.toBe(axilFill);
  });

  it("marks picked vertices", () => {
    const svg = renderGraph(ring6, { picks: [3] });
    expect(svg).toContain('class="vertex picked"');
  });

  it("falls back safely on the empty graph", () => {
    const svg = renderGraph({ version: 1, v: [], e: [] });
    expect(svg).toContain("empty graph");
    expect(svg).toContain("<svg");
  });

  it("is deterministic", () => {
    expect(renderGraph(ring6)).toBe(renderGraph(ring6));
  });
});
