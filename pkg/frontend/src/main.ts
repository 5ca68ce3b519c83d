/** Browser entry: wires the editor textarea, the type selector (populated
 * from /types, never hardcoded), and the overlay container. */

import { ApiClient, TypeInfo } from "./api.js";
import { mount } from "./dom.js";
import { buildOverlay } from "./overlay.js";
import { EditorController, EditorState } from "./state.js";

function apiBase(): string {
  const param = new URLSearchParams(location.search).get("api");
  return param ?? "";
}

async function start(): Promise<void> {
  const editor = document.getElementById("draft") as HTMLTextAreaElement;
  const selector = document.getElementById("type") as HTMLSelectElement;
  const overlayHost = document.getElementById("overlay") as HTMLElement;
  const banner = document.getElementById("banner") as HTMLElement;

  const client = new ApiClient(apiBase());
  let types: TypeInfo[] = [];
  try {
    types = await client.types();
  } catch {
    banner.textContent = "analysis service unreachable";
    banner.hidden = false;
  }
  for (const info of types) {
    const option = document.createElement("option");
    option.value = info.type_name;
    option.textContent = `${info.type_name} (${info.class_name})`;
    selector.appendChild(option);
  }

  const render = (state: EditorState) => {
    const typeInfo =
      types.find(
        (t) => t.type_name === state.lastResponse?.detected_type,
      ) ?? null;
    mount(overlayHost, buildOverlay(state.lastResponse, typeInfo));
    banner.hidden = state.networkError === null;
    if (state.networkError !== null) {
      banner.textContent = `analysis failed: ${state.networkError}`;
    }
    overlayHost.classList.toggle("pending", state.analysisPending);
  };

  const controller = new EditorController(client, render);
  editor.addEventListener("input", () => controller.onEdit(editor.value));
  selector.addEventListener("change", () =>
    controller.onTypeSelected(selector.value === "auto" ? null : selector.value),
  );
}

void start();
