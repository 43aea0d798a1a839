// Application shell: one session against the workbench HTTP service.
// Every user action round-trips to the server and the panel is redrawn
// from the response, so what is on screen is always the server's view.

import { ApiClient, ApiError } from "./api.js";
import { renderApp, CANVAS, type Handlers, type PanelState } from "./render.js";
import {
  circleLayout,
  deriveView,
  type Point,
  type ServerState,
  type VariableRow,
  type ViewState,
} from "./state.js";

const MODEL_PAYLOADS: Record<string, object> = {
  markov: { model: "markov" },
  a3: { model: "dynkin", kind: "A", rank: 3 },
  gr24: { model: "grassmannian", k: 2, n: 4 },
};

export class App {
  private readonly root: HTMLElement;
  private readonly api: ApiClient;
  private sessionId: string | null = null;
  private state: ServerState | null = null;
  private variables: VariableRow[] = [];
  private positions: Point[] = [];
  private banner: string | null = null;
  private tooltip: string | null = null;
  private busy = false;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    this.render();
  }

  view(): ViewState | null {
    if (!this.state) return null;
    return deriveView(this.state, this.positions, this.variables);
  }

  bannerText(): string | null {
    return this.banner;
  }

  tooltipText(): string | null {
    return this.tooltip;
  }

  async loadModel(name: string): Promise<void> {
    const payload = MODEL_PAYLOADS[name];
    if (!payload) {
      this.banner = `unknown model: ${name}`;
      this.render();
      return;
    }
    await this.load(payload);
  }

  async load(payload: object): Promise<void> {
    await this.run(async () => {
      const created = await this.api.createSession(payload);
      this.sessionId = created.id;
      this.state = created.state;
      this.positions = circleLayout(created.state.seed.n, CANVAS.width, CANVAS.height);
      await this.refreshVariables();
    });
  }

  loadFromFile(text: string): Promise<void> {
    let doc: unknown;
    try {
      doc = JSON.parse(text);
    } catch (err) {
      this.banner = `seed file is not valid JSON: ${(err as Error).message}`;
      this.render();
      return Promise.resolve();
    }
    return this.load({ seed: doc });
  }

  async clickVertex(index: number): Promise<void> {
    if (!this.state || !this.sessionId) return;
    if (index > this.state.seed.r) {
      // frozen vertices never mutate; keep this purely client side
      const name = this.state.seed.names[index - 1] ?? `#${index}`;
      this.tooltip = `${name} is frozen and cannot be mutated`;
      this.render();
      return;
    }
    await this.run(async () => {
      this.state = await this.api.mutate(this.sessionId!, index);
      await this.refreshVariables();
    });
  }

  async undo(): Promise<void> {
    if (!this.sessionId) return;
    await this.run(async () => {
      this.state = await this.api.undo(this.sessionId!);
      await this.refreshVariables();
    });
  }

  private async refreshVariables(): Promise<void> {
    if (!this.sessionId) return;
    const result = await this.api.variables(this.sessionId);
    this.variables = result.variables;
  }

  private async run(action: () => Promise<void>): Promise<void> {
    this.busy = true;
    this.banner = null;
    this.tooltip = null;
    this.render();
    try {
      await action();
    } catch (err) {
      if (err instanceof ApiError) {
        this.banner = `server rejected the request: ${err.message}`;
      } else {
        this.banner = `request failed: ${(err as Error).message}`;
      }
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private handlers(): Handlers {
    return {
      onVertexClick: (index) => void this.clickVertex(index),
      onUndo: () => void this.undo(),
      onModel: (name) => void this.loadModel(name),
      onSeedFile: (text) => void this.loadFromFile(text),
      onDragMove: (vertex, point) => {
        if (this.positions[vertex]) {
          this.positions[vertex] = point;
          this.render();
        }
      },
    };
  }

  private render(): void {
    const panel: PanelState = {
      view: this.view(),
      banner: this.banner,
      tooltip: this.tooltip,
      busy: this.busy,
    };
    renderApp(this.root, panel, this.handlers());
  }
}

// Auto-start only inside a real page; test containers create their own App.
const mount = typeof document !== "undefined" ? document.getElementById("app") : null;
if (mount) {
  const base = `${window.location.protocol}//${window.location.host}`;
  const app = new App(mount, new ApiClient(base));
  void app.loadModel("markov");
}
