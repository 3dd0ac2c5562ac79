import type { GraphDocument } from "./types.js";

/** Initial documents for the named topologies (construction only; every
 * transformation afterwards goes through the service). */
export function namedDocument(kind: "ring" | "line" | "complete", n: number): GraphDocument {
  if (!Number.isInteger(n) || n < 1 || n > 63) {
    throw new Error(`vertex count ${n} out of range 1..63`);
  }
  const v = Array.from({ length: n }, (_, i) => i + 1);
  const e: [number, number][] = [];
  if (kind === "complete") {
    for (let i = 1; i <= n; i++) for (let j = i + 1; j <= n; j++) e.push([i, j]);
  } else {
    for (let i = 1; i < n; i++) e.push([i, i + 1]);
    if (kind === "ring" && n >= 3) e.push([1, n]);
  }
  return { version: 1, v, e };
}
