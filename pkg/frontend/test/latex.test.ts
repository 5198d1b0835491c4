// @vitest-environment happy-dom
import { describe, expect, test } from "vitest";

import { renderSequent, typeset } from "../src/latex.js";

describe("latex typesetting", () => {
  test("renders the sequent template with colour and bold turnstile", () => {
    const host = document.createElement("span");
    renderSequent(
      host,
      "p \\ {\\textcolor{magenta}{\\boldsymbol{\\vdash}}}\\ p",
      "p |- p");
    expect(host.textContent).toContain("⊢");
    expect(host.textContent).toContain("p");
    const coloured = host.querySelector("span") as HTMLElement;
    expect(coloured.style.color).toBe("magenta");
  });

  test("maps the connective vocabulary to unicode", () => {
    const host = document.createElement("span");
    renderSequent(host, "p \\wedge (q \\vee r) \\rightarrow \\bot", "x");
    expect(host.textContent).toBe("p ∧ (q ∨ r) → ⊥");
  });

  test("falls back to ascii on unknown macros", () => {
    const host = document.createElement("span");
    renderSequent(host, "\\frobnicate{p}", "p |- p");
    expect(host.textContent).toBe("p |- p");
  });

  test("throws on unbalanced braces", () => {
    expect(() => typeset("{\\vdash", document)).toThrow();
  });

  test("subscript wrapper becomes a styled span", () => {
    const host = document.createElement("span");
    renderSequent(host, "1\\sb{\\mathit{alpha}}", "One alpha");
    expect(host.querySelector(".dc-sub")).not.toBeNull();
    expect(host.textContent).toBe("1alpha");
  });
});
