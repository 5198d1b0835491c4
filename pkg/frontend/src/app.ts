// The interactive proof builder. The server is authoritative: the view's
// tree always equals the last API response, every interaction maps to
// exactly one endpoint, and while a mutating request is in flight all
// inputs are disabled (at most one writer per tab).

import { Api, ApiError, RulesAt, SessionState, TreeNode } from "./api.js";
import { pathKey, renderTree } from "./tree.js";

export class App {
  api: Api;
  root: HTMLElement;
  doc: Document;
  state: SessionState | null = null;
  selected: number[] | null = null;
  picker: RulesAt | null = null;
  pendingLocale: string | null = null; // rule id awaiting a cut formula
  useAbbreviations = false;
  diagnostics = new Map<string, string>();
  banner: string | null = null;
  busy = false;

  constructor(root: HTMLElement, api: Api) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.api = api;
  }

  // ---- interactions: each maps to exactly one API call ------------------

  async createSession(goal: string): Promise<void> {
    await this.mutate(() => this.api.createSession(goal), []);
  }

  async select(path: number[]): Promise<void> {
    this.selected = path;
    this.picker = null;
    this.pendingLocale = null;
    this.busy = true;
    try {
      this.picker = await this.api.rulesAt(path);
      this.banner = null;
    } catch (err) {
      await this.handleError(err, path);
    } finally {
      this.busy = false;
    }
    this.render();
  }

  async pickRule(rule: string): Promise<void> {
    if (this.selected === null) {
      return;
    }
    await this.mutate(() => this.api.apply(this.selected!, rule),
                      this.selected);
  }

  async supplyLocale(rule: string, cutFormula: string): Promise<void> {
    if (this.selected === null) {
      return;
    }
    await this.mutate(
      () => this.api.apply(this.selected!, rule, { cut_formula: cutFormula }),
      this.selected);
  }

  async searchHere(depth: number): Promise<void> {
    if (this.selected === null) {
      return;
    }
    await this.mutate(() => this.api.searchAt(this.selected!, depth),
                      this.selected);
  }

  async deleteHere(): Promise<void> {
    if (this.selected === null || this.selected.length === 0) {
      return;
    }
    await this.mutate(() => this.api.edit("delete", this.selected!),
                      this.selected);
  }

  async recordMacro(name: string): Promise<void> {
    if (this.selected === null) {
      return;
    }
    await this.mutate(() => this.api.defineMacro(name, this.selected!),
                      this.selected);
  }

  async applyMacro(name: string, bindings: Record<string, string>):
      Promise<void> {
    if (this.selected === null) {
      return;
    }
    await this.mutate(
      () => this.api.applyMacro(this.selected!, name, bindings),
      this.selected);
  }

  async defineAbbreviation(name: string, body: string): Promise<void> {
    await this.mutate(() => this.api.defineAbbreviation(name, body),
                      this.selected ?? []);
  }

  async undo(): Promise<void> {
    await this.mutate(() => this.api.undo(), []);
  }

  async exportAs(format: "latex" | "script"): Promise<string> {
    return await this.api.exportSession(format);
  }

  async refetch(): Promise<void> {
    try {
      this.state = await this.api.tree();
      this.banner = null;
    } catch (err) {
      this.banner = `network failure: ${(err as Error).message}`;
    }
    this.render();
  }

  // ---- shared plumbing ----------------------------------------------------

  private async mutate(call: () => Promise<SessionState>,
                       at: number[]): Promise<void> {
    this.busy = true;
    this.render();
    try {
      this.state = await call();
      this.diagnostics.delete(pathKey(at));
      this.banner = null;
      this.picker = null;
      this.pendingLocale = null;
    } catch (err) {
      await this.handleError(err, at);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private async handleError(err: unknown, at: number[]): Promise<void> {
    if (err instanceof ApiError) {
      if (err.status === 404) {
        // stale view: the authoritative tree moved on without us
        this.selected = null;
        this.picker = null;
        await this.refetch();
        return;
      }
      if (err.status === 409 || err.status === 422) {
        this.diagnostics.set(pathKey(at), describe(err.detail));
        return;
      }
      this.banner = `server error ${err.status}: ${describe(err.detail)}`;
      return;
    }
    this.banner = `network failure: ${(err as Error).message}`;
  }

  // ---- rendering ------------------------------------------------------

  render(): void {
    const doc = this.doc;
    this.root.textContent = "";

    if (this.banner !== null) {
      const div = doc.createElement("div");
      div.className = "banner";
      div.textContent = this.banner;
      const retry = doc.createElement("button");
      retry.textContent = "retry";
      retry.id = "retry";
      retry.addEventListener("click", () => void this.refetch());
      div.appendChild(retry);
      this.root.appendChild(div);
    }

    if (this.state === null) {
      return;
    }

    const treeHost = doc.createElement("div");
    treeHost.id = "tree";
    renderTree(treeHost, this.state.tree, {
      selected: this.selected,
      useAbbreviations: this.useAbbreviations,
      abbreviations: this.state.abbreviations,
      diagnostics: this.diagnostics,
    }, { onSelect: (p) => void this.select(p) });
    this.root.appendChild(treeHost);

    const side = doc.createElement("div");
    side.id = "sidebar";
    this.renderControls(side);
    if (this.picker !== null && this.selected !== null) {
      this.renderPicker(side);
    }
    this.root.appendChild(side);
  }

  private renderControls(side: HTMLElement): void {
    const doc = this.doc;
    const bar = doc.createElement("div");
    bar.className = "controls";
    const mk = (id: string, text: string, fn: () => void) => {
      const b = doc.createElement("button");
      b.id = id;
      b.textContent = text;
      b.disabled = this.busy;
      b.addEventListener("click", fn);
      bar.appendChild(b);
      return b;
    };
    mk("undo", "undo", () => void this.undo());
    mk("search-here", "search here", () => void this.searchHere(5));
    mk("delete-here", "delete", () => void this.deleteHere());
    mk("toggle-abbrev", this.useAbbreviations ? "abbrev: on" : "abbrev: off",
       () => {
         this.useAbbreviations = !this.useAbbreviations;
         this.render();
       });
    mk("export-latex", "export .tex", () => void this.download("latex"));
    mk("export-script", "export .proof", () => void this.download("script"));
    side.appendChild(bar);
    const status = doc.createElement("div");
    status.id = "status";
    const open = this.state!.open_paths.length;
    status.textContent = open === 0
      ? "complete: no open goals"
      : `${open} open goal${open === 1 ? "" : "s"}`;
    side.appendChild(status);
  }

  private renderPicker(side: HTMLElement): void {
    const doc = this.doc;
    const box = doc.createElement("div");
    box.id = "rule-picker";
    const head = doc.createElement("h3");
    head.textContent = `rules at ${pathKey(this.selected!)}`;
    box.appendChild(head);

    const list = doc.createElement("ul");
    for (const choice of this.picker!.applicable) {
      const item = doc.createElement("li");
      const btn = doc.createElement("button");
      btn.className = "rule-choice";
      btn.dataset.rule = choice.rule;
      btn.textContent = choice.rule;
      btn.disabled = this.busy;
      btn.addEventListener("click", () => void this.pickRule(choice.rule));
      item.appendChild(btn);
      const preview = doc.createElement("span");
      preview.className = "premise-preview";
      preview.textContent = choice.premises.length
        ? " ⇐ " + choice.premises.join("   |   ")
        : " closes";
      item.appendChild(preview);
      list.appendChild(item);
    }
    box.appendChild(list);

    if (this.picker!.needs_locale.length > 0) {
      const head2 = doc.createElement("h4");
      head2.textContent = "needs a locale";
      box.appendChild(head2);
      const list2 = doc.createElement("ul");
      for (const choice of this.picker!.needs_locale) {
        const item = doc.createElement("li");
        const btn = doc.createElement("button");
        btn.className = "locale-choice";
        btn.dataset.rule = choice.rule;
        btn.textContent = `${choice.rule} (${choice.locale})`;
        btn.disabled = this.busy;
        btn.addEventListener("click", () => {
          this.pendingLocale = choice.rule;
          this.render();
        });
        item.appendChild(btn);
        list2.appendChild(item);
      }
      box.appendChild(list2);
    }

    if (this.pendingLocale !== null) {
      const form = doc.createElement("div");
      form.id = "locale-prompt";
      const label = doc.createElement("label");
      label.textContent = `cut formula for ${this.pendingLocale}: `;
      const input = doc.createElement("input");
      input.id = "cut-formula";
      label.appendChild(input);
      form.appendChild(label);
      const go = doc.createElement("button");
      go.id = "supply-locale";
      go.textContent = "apply";
      go.addEventListener("click", () => {
        void this.supplyLocale(this.pendingLocale!, input.value);
      });
      form.appendChild(go);
      box.appendChild(form);
    }
    side.appendChild(box);
  }

  private async download(format: "latex" | "script"): Promise<void> {
    try {
      const text = await this.exportAs(format);
      const blob = new Blob([text], { type: "text/plain" });
      const a = this.doc.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = format === "latex" ? "proof.tex" : "session.proof";
      a.click();
    } catch (err) {
      await this.handleError(err, this.selected ?? []);
      this.render();
    }
  }
}

function describe(detail: unknown): string {
  if (typeof detail === "string") {
    return detail;
  }
  if (detail && typeof detail === "object" && "error" in detail) {
    const d = detail as { error: string; needs_locale?: string };
    return d.needs_locale ? `${d.error} (supply: ${d.needs_locale})` : d.error;
  }
  return JSON.stringify(detail);
}
