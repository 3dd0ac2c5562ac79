import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { namedDocument } from "./documents.js";
import { renderGraph } from "./render.js";
import type { ViewModel } from "./viewmodel.js";
import { Mode, statusLabel } from "./viewmodel.js";

/** Browser wiring: DOM events in, SVG markup out. */

const serviceUrl =
  new URLSearchParams(location.search).get("service") ?? "http://127.0.0.1:8000";

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

const controller = new ExplorerController(new ApiClient(serviceUrl), update);

function update(vm: ViewModel): void {
  const scene = $("scene");
  if (vm.view) {
    scene.innerHTML = renderGraph(vm.view.document, {
      foliage: vm.foliageHighlight ? vm.view.foliage : null,
      picks: vm.picks,
    });
  } else {
    scene.innerHTML = "<p>No session. Create a graph to begin.</p>";
  }
  $("status").textContent = `target: ${statusLabel(vm)}`;
  $("status").dataset.status = vm.view?.target_status ?? "none";
  $("history").textContent = vm.view ? vm.view.history.join(" → ") : "";
  const notice = $("notice");
  notice.textContent = vm.notice ?? "";
  notice.hidden = !vm.notice;
  $<HTMLButtonElement>("retry").hidden = !vm.canRetry;
  $<HTMLButtonElement>("undo").disabled = vm.busy || (vm.view?.history_length ?? 1) <= 1;
  for (const button of document.querySelectorAll<HTMLButtonElement>("[data-mode]")) {
    button.classList.toggle("active", button.dataset.mode === vm.mode);
  }
  const picksLeft =
    vm.mode === "cz" ? 2 - vm.picks.length : vm.mode === "target" ? 4 - vm.picks.length : 0;
  $("picks").textContent = picksLeft > 0 ? `pick ${picksLeft} more` : "";
}

$("scene").addEventListener("click", (event) => {
  const node = (event.target as Element).closest<SVGElement>("[data-vertex]");
  if (node?.dataset.vertex) {
    void controller.clickVertex(Number(node.dataset.vertex));
  }
});

for (const button of document.querySelectorAll<HTMLButtonElement>("[data-mode]")) {
  button.addEventListener("click", () => controller.setMode(button.dataset.mode as Mode));
}

$("undo").addEventListener("click", () => void controller.undo());
$("retry").addEventListener("click", () => void controller.retry());
$("clear-target").addEventListener("click", () => void controller.clearTarget());
$<HTMLInputElement>("foliage").addEventListener("change", () => controller.toggleFoliage());

$("create").addEventListener("submit", (event) => {
  event.preventDefault();
  const kind = $<HTMLSelectElement>("kind").value as "ring" | "line" | "complete";
  const n = Number($<HTMLInputElement>("n").value);
  void controller.createSession(namedDocument(kind, n));
});

update(controller.viewModel);
