import { Api } from "./api.js";
import { App } from "./app.js";

export function mount(doc: Document, base = ""): App {
  const api = new Api(base);
  const root = doc.getElementById("app");
  if (root === null) {
    throw new Error("missing #app element");
  }
  const app = new App(root, api);

  const form = doc.getElementById("goal-form") as HTMLFormElement;
  const input = doc.getElementById("goal-input") as HTMLInputElement;
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void app.createSession(input.value);
  });
  return app;
}

declare global {
  interface Window {
    displaycalc?: App;
  }
}

if (typeof window !== "undefined" && window.document.getElementById("app")) {
  window.displaycalc = mount(window.document);
}
