// A small in-browser typesetter for the LaTeX surface strings the server
// produces. It understands exactly the macro vocabulary that calculus
// description files tend to use; anything it cannot handle throws, and the
// caller falls back to the ascii rendering for that node (which keeps the
// UI usable with arbitrary user-defined calculi).

const SYMBOLS: Record<string, string> = {
  "\\wedge": "∧",
  "\\vee": "∨",
  "\\rightarrow": "→",
  "\\leftarrow": "←",
  "\\top": "⊤",
  "\\bot": "⊥",
  "\\vdash": "⊢",
  "\\langle": "⟨",
  "\\rangle": "⟩",
  "\\Phi": "Φ",
  "\\alpha": "α",
  "\\beta": "β",
  "\\Diamond": "◇",
  "\\Box": "□",
  "\\{": "{",
  "\\}": "}",
  "\\,": " ",
  "\\;": " ",
  "\\ ": " ",
  "\\textrm": "",
};

const WRAPPERS: Record<string, string> = {
  "\\boldsymbol": "dc-bold",
  "\\mathbf": "dc-bold",
  "\\texttt": "dc-tt",
  "\\mathit": "dc-it",
  "\\textit": "dc-it",
  "\\mathrm": "",
  "\\textrm": "",
  "\\sb": "dc-sub",
};

export class TypesetError extends Error {}

interface Cursor {
  src: string;
  pos: number;
}

function parseGroup(cur: Cursor, out: Node[], doc: Document): void {
  // consumes one {...} group, appending rendered nodes to out
  if (cur.src[cur.pos] !== "{") {
    throw new TypesetError("expected a group");
  }
  cur.pos += 1;
  parseUntil(cur, out, "}", doc);
  cur.pos += 1; // closing brace
}

function parseUntil(cur: Cursor, out: Node[], stop: string | null,
                    doc: Document): void {
  let text = "";
  const flush = () => {
    if (text) {
      out.push(doc.createTextNode(text));
      text = "";
    }
  };
  while (cur.pos < cur.src.length) {
    const c = cur.src[cur.pos];
    if (stop !== null && c === stop) {
      flush();
      return;
    }
    if (c === "{") {
      flush();
      parseGroup(cur, out, doc);
      continue;
    }
    if (c === "}") {
      throw new TypesetError("unbalanced brace");
    }
    if (c === "\\") {
      flush();
      const macro = readMacro(cur);
      if (macro === "\\textcolor") {
        const colour: Node[] = [];
        parseGroup(cur, colour, doc);
        const inner: Node[] = [];
        parseGroup(cur, inner, doc);
        const span = doc.createElement("span");
        span.style.color = nodeText(colour);
        inner.forEach((n) => span.appendChild(n));
        out.push(span);
        continue;
      }
      if (macro in WRAPPERS) {
        const span = doc.createElement("span");
        if (WRAPPERS[macro]) {
          span.className = WRAPPERS[macro];
        }
        const inner: Node[] = [];
        parseGroup(cur, inner, doc);
        inner.forEach((n) => span.appendChild(n));
        out.push(span);
        continue;
      }
      if (macro in SYMBOLS) {
        text += SYMBOLS[macro];
        continue;
      }
      throw new TypesetError(`unknown macro ${macro}`);
    }
    text += c;
    cur.pos += 1;
  }
  flush();
  if (stop !== null) {
    throw new TypesetError("unterminated group");
  }
}

function readMacro(cur: Cursor): string {
  const rest = cur.src.slice(cur.pos);
  const m = rest.match(/^\\[A-Za-z]+/);
  if (m) {
    cur.pos += m[0].length;
    return m[0];
  }
  const two = rest.slice(0, 2);
  cur.pos += 2;
  return two;
}

function nodeText(nodes: Node[]): string {
  return nodes.map((n) => n.textContent ?? "").join("");
}

export function typeset(latex: string, doc: Document): Node[] {
  const cur: Cursor = { src: latex, pos: 0 };
  const out: Node[] = [];
  parseUntil(cur, out, null, doc);
  return out;
}

// Render a sequent into `target`, preferring the latex surface and falling
// back to the ascii text when typesetting fails.
export function renderSequent(target: HTMLElement, latex: string,
                              ascii: string): void {
  const doc = target.ownerDocument;
  target.textContent = "";
  try {
    for (const node of typeset(latex, doc)) {
      target.appendChild(node);
    }
  } catch {
    target.textContent = ascii;
  }
}
