// Pure view-state derivation: no DOM, no network. Everything the
// renderer shows is computed here from server payloads, so the logic
// is testable without a browser.

export interface GradingDoc {
  factors: number[];
  vectors: number[][];
}

export interface SeedDoc {
  n: number;
  r: number;
  B: number[][];
  names: string[];
  gradings: GradingDoc[];
}

export interface ServerState {
  id: string;
  model: string;
  seed: SeedDoc;
  cluster: string[];
  degrees: number[][][]; // [grading][vertex][component]
  history: number[];
  history_length: number;
}

export interface VariableRow {
  laurent: string;
  degrees: number[][];
  first_seen: number;
}

export interface Point {
  x: number;
  y: number;
}

export interface VertexView {
  index: number; // 1-based, the server's mutation index
  name: string;
  frozen: boolean;
  degrees: string[]; // one formatted tuple per grading
  position: Point;
}

export interface ArrowView {
  from: number; // 0-based vertex indices
  to: number;
  weight: number;
}

export interface ViewState {
  model: string;
  vertices: VertexView[];
  arrows: ArrowView[];
  history: number[];
  variables: { laurent: string; pretty: string; degrees: string[]; firstSeen: number }[];
}

// torsion components read "v mod d", free components read "v"
export function formatDegree(vector: number[], factors: number[]): string {
  const parts = vector.map((v, i) => {
    const d = factors[i] ?? 0;
    return d > 0 ? `${v} mod ${d}` : `${v}`;
  });
  return `(${parts.join(", ")})`;
}

export function degreeStrings(state: ServerState, vertex: number): string[] {
  return state.seed.gradings.map((g, gi) => {
    const vec = state.degrees[gi]?.[vertex] ?? [];
    return formatDegree(vec, g.factors);
  });
}

// Entry B[i][j] counts arrows j -> i minus arrows i -> j. Exchangeable
// pairs appear in both triangles, so only the lower one is read; frozen
// rows exist once and are always read.
export function arrowsFromMatrix(B: number[][], r: number): ArrowView[] {
  const arrows: ArrowView[] = [];
  for (let i = 0; i < B.length; i++) {
    const row = B[i]!;
    for (let j = 0; j < Math.min(r, row.length); j++) {
      if (i < r && i <= j) continue;
      const entry = row[j]!;
      if (entry > 0) arrows.push({ from: j, to: i, weight: entry });
      else if (entry < 0) arrows.push({ from: i, to: j, weight: -entry });
    }
  }
  return arrows;
}

export function circleLayout(count: number, width: number, height: number): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 2 - 60;
  const points: Point[] = [];
  for (let i = 0; i < count; i++) {
    const angle = (2 * Math.PI * i) / count - Math.PI / 2;
    points.push({
      x: Math.round(cx + radius * Math.cos(angle)),
      y: Math.round(cy + radius * Math.sin(angle)),
    });
  }
  return points;
}

// "1:-1,0,2;1:-1,2,0" -> "x1^-1 x3^2 + x1^-1 x2^2"
export function prettyLaurent(serialized: string, names: string[]): string {
  if (serialized === "0") return "0";
  const terms = serialized.split(";").map((term) => {
    const [coeffText, expText] = term.split(":");
    const coeff = Number(coeffText);
    const exponents = (expText ?? "").split(",").map(Number);
    const factors = exponents
      .map((e, i) => {
        if (e === 0) return "";
        const name = names[i] ?? `x${i + 1}`;
        return e === 1 ? name : `${name}^${e}`;
      })
      .filter((s) => s !== "");
    if (factors.length === 0) return `${coeff}`;
    const monomial = factors.join(" ");
    if (coeff === 1) return monomial;
    if (coeff === -1) return `-${monomial}`;
    return `${coeff} ${monomial}`;
  });
  return terms.join(" + ");
}

export function deriveView(
  state: ServerState,
  positions: Point[],
  variables: VariableRow[],
): ViewState {
  const vertices: VertexView[] = state.seed.names.map((name, i) => ({
    index: i + 1,
    name,
    frozen: i >= state.seed.r,
    degrees: degreeStrings(state, i),
    position: positions[i] ?? { x: 0, y: 0 },
  }));
  return {
    model: state.model,
    vertices,
    arrows: arrowsFromMatrix(state.seed.B, state.seed.r),
    history: [...state.history],
    variables: variables.map((v) => ({
      laurent: v.laurent,
      pretty: prettyLaurent(v.laurent, state.seed.names),
      degrees: v.degrees.map((vec, gi) =>
        formatDegree(vec, state.seed.gradings[gi]?.factors ?? []),
      ),
      firstSeen: v.first_seen,
    })),
  };
}
