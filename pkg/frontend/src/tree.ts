// Inference-tree layout: premises above their conclusion, a horizontal
// inference line between them with the rule label to its right. The whole
// layout is rebuilt on every update; trees in this domain are small.

import { TreeNode } from "./api.js";
import { renderSequent } from "./latex.js";

export interface TreeCallbacks {
  onSelect: (path: number[]) => void;
}

export interface DisplayOptions {
  selected: number[] | null;
  useAbbreviations: boolean;
  abbreviations: Record<string, string>;
  diagnostics: Map<string, string>;
}

function samePath(a: number[], b: number[] | null): boolean {
  return b !== null && a.length === b.length && a.every((x, i) => x === b[i]);
}

export function pathKey(path: number[]): string {
  return path.join(".");
}

function foldAbbreviations(ascii: string,
                           abbreviations: Record<string, string>): string {
  let out = ascii;
  for (const [name, body] of Object.entries(abbreviations)) {
    out = out.split(`(${body})`).join(name);
    out = out.split(body).join(name);
  }
  return out;
}

export function renderTree(root: HTMLElement, tree: TreeNode,
                           options: DisplayOptions,
                           callbacks: TreeCallbacks): void {
  const doc = root.ownerDocument;
  root.textContent = "";
  root.appendChild(renderNode(doc, tree, options, callbacks));
}

function renderNode(doc: Document, node: TreeNode, options: DisplayOptions,
                    callbacks: TreeCallbacks): HTMLElement {
  const box = doc.createElement("div");
  box.className = "proof-node";

  if (node.children.length > 0) {
    const premises = doc.createElement("div");
    premises.className = "premises";
    for (const child of node.children) {
      premises.appendChild(renderNode(doc, child, options, callbacks));
    }
    box.appendChild(premises);
  }

  const row = doc.createElement("div");
  row.className = "conclusion-row";

  const seq = doc.createElement("span");
  seq.className = "sequent" + (node.open ? " open" : "");
  if (!node.open || node.children.length > 0) {
    seq.classList.add("inferred");
  }
  if (samePath(node.path, options.selected)) {
    seq.classList.add("selected");
  }
  seq.dataset.path = pathKey(node.path);
  if (options.useAbbreviations
      && Object.keys(options.abbreviations).length > 0) {
    seq.textContent = foldAbbreviations(node.sequent, options.abbreviations);
  } else {
    renderSequent(seq, node.latex, node.sequent);
  }
  seq.addEventListener("click", (ev) => {
    ev.stopPropagation();
    callbacks.onSelect(node.path);
  });
  row.appendChild(seq);

  if (!node.open) {
    const label = doc.createElement("span");
    label.className = "rule-label";
    renderSequent(label, node.label, ruleName(node.rule));
    row.appendChild(label);
  }
  box.appendChild(row);

  const diag = options.diagnostics.get(pathKey(node.path));
  if (diag) {
    const msg = doc.createElement("div");
    msg.className = "diagnostic";
    msg.textContent = diag;
    box.appendChild(msg);
  }
  return box;
}

function ruleName(rule: string | { macro: string }): string {
  return typeof rule === "string" ? rule : rule.macro;
}
