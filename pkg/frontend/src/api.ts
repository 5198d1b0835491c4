// Typed client for the /api/v1 session endpoints. Every mutating call is
// recorded so a session can be replayed headlessly and compared against the
// server's authoritative tree.

export interface TreeNode {
  sequent: string;
  latex: string;
  rule: string | { macro: string };
  label: string;
  open: boolean;
  path: number[];
  children: TreeNode[];
}

export interface SessionState {
  session_id?: string;
  tree: TreeNode;
  open_paths: number[][];
  locales: unknown[];
  macros: string[];
  abbreviations: Record<string, string>;
}

export interface RuleChoice {
  rule: string;
  latex: string;
  premises: string[];
}

export interface LocaleChoice {
  rule: string;
  locale: string;
}

export interface RulesAt {
  applicable: RuleChoice[];
  needs_locale: LocaleChoice[];
}

export interface TranscriptEntry {
  method: string;
  path: string;
  body: unknown | null;
}

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }
}

export class Api {
  base: string;
  transcript: TranscriptEntry[] = [];
  private sid: string | null = null;

  constructor(base = "") {
    this.base = base;
  }

  get sessionId(): string | null {
    return this.sid;
  }

  private async request(method: string, path: string, body: unknown | null,
                        record: boolean): Promise<unknown> {
    if (record) {
      this.transcript.push({ method, path, body });
    }
    const url = this.base + path.replace("{sid}", this.sid ?? "");
    const res = await fetch(url, {
      method,
      headers: body === null ? {} : { "Content-Type": "application/json" },
      body: body === null ? undefined : JSON.stringify(body),
    });
    const text = await res.text();
    let data: unknown = text;
    try {
      data = JSON.parse(text);
    } catch {
      // non-JSON responses (exports) pass through as text
    }
    if (!res.ok) {
      const detail = (data as { detail?: unknown })?.detail ?? data;
      throw new ApiError(res.status, detail);
    }
    return data;
  }

  async createSession(goal: string): Promise<SessionState> {
    const state = await this.request(
      "POST", "/api/v1/sessions", { goal, locales: [] }, true) as SessionState;
    this.sid = state.session_id ?? null;
    return state;
  }

  async tree(): Promise<SessionState> {
    return await this.request(
      "GET", "/api/v1/sessions/{sid}/tree", null, false) as SessionState;
  }

  async rulesAt(path: number[]): Promise<RulesAt> {
    return await this.request(
      "GET", `/api/v1/sessions/{sid}/rules?path=${path.join(".")}`,
      null, false) as RulesAt;
  }

  async apply(path: number[], rule: string,
              locale?: { cut_formula: string }): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/apply",
      { path, rule, locale: locale ?? null }, true) as SessionState;
  }

  async edit(op: "graft" | "delete", path: number[],
             subtree?: unknown): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/edit",
      { op, path, subtree: subtree ?? null }, true) as SessionState;
  }

  async searchAt(path: number[], depth: number): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/search",
      { path, depth }, true) as SessionState;
  }

  async defineMacro(name: string, path: number[]): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/macros",
      { name, path }, true) as SessionState;
  }

  async applyMacro(path: number[], macro: string,
                   bindings: Record<string, string>): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/apply_macro",
      { path, macro, bindings }, true) as SessionState;
  }

  async defineAbbreviation(name: string, body: string): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/abbreviations",
      { name, body }, true) as SessionState;
  }

  async exportSession(format: "latex" | "script"): Promise<string> {
    const out = await this.request(
      "GET", `/api/v1/sessions/{sid}/export?format=${format}`, null, false);
    return typeof out === "string" ? out : JSON.stringify(out);
  }

  async undo(): Promise<SessionState> {
    return await this.request(
      "POST", "/api/v1/sessions/{sid}/undo", null, true) as SessionState;
  }
}

// Replay a recorded transcript against a fresh session; returns the final
// authoritative tree. The UI performs no proof logic, so this must agree
// with what the interactive session produced.
export async function replayTranscript(
    base: string, transcript: TranscriptEntry[]): Promise<TreeNode> {
  let sid: string | null = null;
  for (const entry of transcript) {
    const url = base + entry.path.replace("{sid}", sid ?? "");
    const res = await fetch(url, {
      method: entry.method,
      headers: entry.body === null ? {} : { "Content-Type": "application/json" },
      body: entry.body === null ? undefined : JSON.stringify(entry.body),
    });
    if (!res.ok) {
      throw new ApiError(res.status, await res.text());
    }
    const data = await res.json() as SessionState;
    if (data.session_id) {
      sid = data.session_id;
    }
  }
  const res = await fetch(`${base}/api/v1/sessions/${sid}/tree`);
  const state = await res.json() as SessionState;
  return state.tree;
}
