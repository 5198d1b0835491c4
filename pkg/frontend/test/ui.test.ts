// @vitest-environment happy-dom
// @vitest-environment-options {"url": "http://127.0.0.1:8347"}
//
// End-to-end: drive the UI against a real server process by clicking, then
// replay the recorded API transcript headlessly and compare trees, and check
// that a UI export byte-equals the CLI export of the same session.

import { spawn, spawnSync, ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, expect, test } from "vitest";

import { replayTranscript, TreeNode } from "../src/api.js";
import { App } from "../src/app.js";
import { mount } from "../src/main.js";

const PORT = 8347;  // must match the environment-options URL above
const BASE = `http://127.0.0.1:${PORT}`;
const HERE = dirname(fileURLToPath(import.meta.url));
const REPO = join(HERE, "..", "..");

let server: ChildProcess;

async function serverReady(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/api/v1/calculus`);
      if (res.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "displaycalc.cli", "serve",
                             "--port", String(PORT)],
                 { cwd: REPO, stdio: "ignore" });
  await serverReady();
}, 30000);

afterAll(() => {
  server?.kill();
});

function setupDom(): App {
  document.body.innerHTML = `
    <form id="goal-form"><input id="goal-input"><button id="create"
      type="submit">start</button></form>
    <main id="app"></main>`;
  return mount(document, BASE);
}

async function settle(app: App): Promise<void> {
  // requests resolve on microtasks; a few macrotask turns settle the UI
  for (let i = 0; i < 20; i++) {
    await new Promise((r) => setTimeout(r, 25));
    if (!app.busy) {
      return;
    }
  }
}

function click(selector: string): void {
  const el = document.querySelector(selector) as HTMLElement | null;
  if (el === null) {
    throw new Error(`nothing to click for ${selector}`);
  }
  el.click();
}

async function clickSequent(app: App, path: number[]): Promise<void> {
  click(`[data-path="${path.join(".")}"]`);
  await settle(app);
}

async function clickRule(app: App, rule: string): Promise<void> {
  click(`button.rule-choice[data-rule="${rule}"]`);
  await settle(app);
}

test("clicks build p \\/ q |- q ; p and the transcript replays identically",
     async () => {
  const app = setupDom();

  (document.getElementById("goal-input") as HTMLInputElement).value =
    "p \\/ q |- q ; p";
  (document.getElementById("goal-form") as HTMLFormElement)
    .dispatchEvent(new Event("submit"));
  await settle(app);
  expect(app.state).not.toBeNull();
  expect(app.state!.open_paths).toEqual([[]]);

  // the commutativity move, the disjunction rule, then identity twice
  await clickSequent(app, []);
  await clickRule(app, "E_R");
  await clickSequent(app, [0]);
  await clickRule(app, "Or_L");
  await clickSequent(app, [0, 0]);
  await clickRule(app, "Id");
  await clickSequent(app, [0, 1]);
  await clickRule(app, "Id");

  expect(app.state!.open_paths).toEqual([]);
  const status = document.getElementById("status")!;
  expect(status.textContent).toContain("complete");

  // the UI performed no proof logic: replaying its API transcript yields
  // the identical tree
  const replayed: TreeNode = await replayTranscript(BASE, app.api.transcript);
  expect(replayed).toEqual(app.state!.tree);

  // UI export bytes equal the CLI export bytes for the same session
  const uiLatex = await app.exportAs("latex");
  const script = await app.exportAs("script");
  const dir = mkdtempSync(join(tmpdir(), "displaycalc-"));
  const scriptPath = join(dir, "session.proof");
  const texPath = join(dir, "session.tex");
  writeFileSync(scriptPath, script);
  const res = spawnSync("python3",
                        ["-m", "displaycalc.cli", "latex", "deak.json",
                         scriptPath, "-o", texPath],
                        { cwd: REPO });
  expect(res.status).toBe(0);
  const cliLatex = readFileSync(texPath, "utf-8");
  expect(uiLatex).toBe(cliLatex);
  rmSync(dir, { recursive: true, force: true });
}, 60000);

test("cut prompt appears for locale-needing rules and applies the formula",
     async () => {
  const app = setupDom();
  (document.getElementById("goal-input") as HTMLInputElement).value =
    "s |- t";
  (document.getElementById("goal-form") as HTMLFormElement)
    .dispatchEvent(new Event("submit"));
  await settle(app);

  await clickSequent(app, []);
  expect(document.querySelector(
    'button.locale-choice[data-rule="SingleCut"]')).not.toBeNull();
  click('button.locale-choice[data-rule="SingleCut"]');
  await settle(app);
  const input = document.getElementById("cut-formula") as HTMLInputElement;
  expect(input).not.toBeNull();
  input.value = "p";
  click("#supply-locale");
  await settle(app);
  expect(app.state!.tree.children.map((c) => c.sequent))
    .toEqual(["s |- p", "p |- t"]);
}, 60000);

test("rule mismatches surface as inline diagnostics", async () => {
  const app = setupDom();
  (document.getElementById("goal-input") as HTMLInputElement).value =
    "p |- q";
  (document.getElementById("goal-form") as HTMLFormElement)
    .dispatchEvent(new Event("submit"));
  await settle(app);

  await clickSequent(app, []);
  // the picker never offers inapplicable rules; drive the stale-picker path
  await app.pickRule("Atom");  // does not apply to distinct atoms -> 409
  await settle(app);
  expect(document.querySelector(".diagnostic")).not.toBeNull();
  expect(document.querySelector(".diagnostic")!.textContent)
    .toContain("Atom");
}, 60000);
