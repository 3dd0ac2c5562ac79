import { ApiClient, ApiError } from "./api.js";
import type { GraphDocument, SessionView, StepRequest } from "./types.js";
import {
  Mode,
  ViewModel,
  addPick,
  initialViewModel,
  stepForPicks,
  targetForPicks,
  toggleFoliage,
  withBusy,
  withMode,
  withNotice,
  withResponse,
} from "./viewmodel.js";

/**
 * Orchestrates the explorer: turns clicks into service calls and service
 * responses into view-model updates. One step request is in flight at a
 * time; clicks while busy are dropped. Service rejections become notices
 * and leave the rendered state untouched; network failures additionally
 * offer a retry of the failed call.
 */
export class ExplorerController {
  private vm: ViewModel = initialViewModel();
  private lastFailed: (() => Promise<SessionView>) | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (vm: ViewModel) => void = () => {},
  ) {}

  get viewModel(): ViewModel {
    return this.vm;
  }

  private set(vm: ViewModel): void {
    this.vm = vm;
    this.onChange(vm);
  }

  setMode(mode: Mode): void {
    this.set(withMode(this.vm, mode));
  }

  toggleFoliage(): void {
    this.set(toggleFoliage(this.vm));
  }

  async createSession(doc: GraphDocument): Promise<void> {
    await this.dispatch(() => this.api.createSession(doc));
  }

  /** Route a vertex click through the current mode's pick logic. */
  async clickVertex(vertex: number): Promise<void> {
    if (this.vm.busy || !this.vm.view) return;
    const { vm, ready } = addPick(this.vm, vertex);
    this.set(vm);
    if (!ready) return;
    const id = vm.view!.id;
    if (vm.mode === "target") {
      const target = targetForPicks(vm.picks);
      if (target) await this.dispatch(() => this.api.setTarget(id, target));
      return;
    }
    const step = stepForPicks(vm.mode, vm.picks);
    if (step) await this.dispatch(() => this.api.step(id, step));
  }

  async undo(): Promise<void> {
    await this.sendStep({ op: "undo" });
  }

  async sendStep(step: StepRequest): Promise<void> {
    if (this.vm.busy || !this.vm.view) return;
    const id = this.vm.view.id;
    await this.dispatch(() => this.api.step(id, step));
  }

  async clearTarget(): Promise<void> {
    if (this.vm.busy || !this.vm.view) return;
    const id = this.vm.view.id;
    await this.dispatch(() => this.api.setTarget(id, null));
  }

  /** Re-send the call that failed on the network. */
  async retry(): Promise<void> {
    if (this.vm.busy || !this.lastFailed) return;
    await this.dispatch(this.lastFailed);
  }

  private async dispatch(call: () => Promise<SessionView>): Promise<void> {
    this.set(withBusy(this.vm, true));
    try {
      const view = await call();
      this.lastFailed = null;
      this.set(withResponse(this.vm, view));
    } catch (err) {
      if (err instanceof ApiError) {
        this.lastFailed = null;
        this.set(withNotice(this.vm, err.message));
      } else {
        this.lastFailed = call;
        this.set(withNotice(this.vm, "network failure; the view is unchanged", true));
      }
    }
  }
}
