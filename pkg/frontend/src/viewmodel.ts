import type { BellTarget, SessionView, StepRequest } from "./types.js";

/**
 * Local UI state. Everything about the graph comes verbatim from the last
 * service response; the client only adds the action mode, pending vertex
 * picks, the foliage-highlight toggle, and transient notices.
 */

export type Mode = "lc" | "x" | "y" | "z" | "cz" | "target";

export interface ViewModel {
  view: SessionView | null;
  mode: Mode;
  picks: number[];
  foliageHighlight: boolean;
  notice: string | null;
  /** a step is in flight; further clicks are ignored until it resolves */
  busy: boolean;
  /** network failure left the view stale; offer a retry */
  canRetry: boolean;
}

export function initialViewModel(): ViewModel {
  return {
    view: null,
    mode: "lc",
    picks: [],
    foliageHighlight: false,
    notice: null,
    busy: false,
    canRetry: false,
  };
}

/** Replace the rendered state with a fresh service response. */
export function withResponse(vm: ViewModel, view: SessionView): ViewModel {
  return { ...vm, view, picks: [], notice: null, busy: false, canRetry: false };
}

export function withMode(vm: ViewModel, mode: Mode): ViewModel {
  return { ...vm, mode, picks: [] };
}

export function withNotice(vm: ViewModel, notice: string, canRetry = false): ViewModel {
  return { ...vm, notice, busy: false, canRetry, picks: canRetry ? vm.picks : [] };
}

export function withBusy(vm: ViewModel, busy: boolean): ViewModel {
  return { ...vm, busy };
}

export function toggleFoliage(vm: ViewModel): ViewModel {
  return { ...vm, foliageHighlight: !vm.foliageHighlight };
}

export function picksNeeded(mode: Mode): number {
  if (mode === "cz") return 2;
  if (mode === "target") return 4;
  return 1;
}

/** Record a vertex pick; `ready` once the mode has all the picks it needs. */
export function addPick(vm: ViewModel, vertex: number): { vm: ViewModel; ready: boolean } {
  if (vm.picks.includes(vertex)) {
    return { vm, ready: false };
  }
  const picks = [...vm.picks, vertex];
  const ready = picks.length >= picksNeeded(vm.mode);
  return { vm: { ...vm, picks }, ready };
}

/** The step request a completed pick set stands for (target mode sends none). */
export function stepForPicks(mode: Mode, picks: number[]): StepRequest | null {
  const first = picks[0];
  if (first === undefined) return null;
  switch (mode) {
    case "lc":
      return { op: "lc", vertex: first };
    case "x":
    case "y":
    case "z":
      return { op: "measure", vertex: first, basis: mode.toUpperCase() as "X" | "Y" | "Z" };
    case "cz":
      return picks.length >= 2 ? { op: "cz", u: first, v: picks[1]! } : null;
    case "target":
      return null;
  }
}

/** Pair up four target picks in click order: first two against last two. */
export function targetForPicks(picks: number[]): BellTarget | null {
  if (picks.length < 4) return null;
  return {
    pair_a: [picks[0]!, picks[1]!],
    pair_b: [picks[2]!, picks[3]!],
  };
}

export function statusLabel(vm: ViewModel): string {
  const status = vm.view?.target_status ?? "none";
  if (status === "unknown_budget") return "unknown (budget)";
  return status;
}
