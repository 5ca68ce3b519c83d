/** Pure overlay construction: an AnalyzeResponse becomes a tree of
 * virtual nodes (no DOM access), which keeps every annotation rule unit
 * testable in isolation. The tree renders server tokens verbatim; the
 * overlay never re-segments text. */

import { AnalyzeResponse, GanamCell, TypeInfo } from "./api.js";

export interface VNode {
  tag: string;
  className?: string;
  text?: string;
  title?: string;
  children?: VNode[];
}

export const UNMATCHED = "UnMatched";

function aksharamNode(token: string, mark: string, extraClass = ""): VNode {
  return {
    tag: "span",
    className: `aksharam${extraClass}`,
    children: [
      { tag: "span", className: "glyph", text: token },
      { tag: "span", className: "mark", text: mark },
    ],
  };
}

function tokenLines(response: AnalyzeResponse): VNode {
  return {
    tag: "div",
    className: "token-lines",
    children: response.tokens.map((line) => ({
      tag: "div",
      className: "token-line",
      children: line.map((t) => aksharamNode(t.token, t.mark)),
    })),
  };
}

/** Verdict for a 1-based row number, or null when the row carries no
 * yati expectation. Verdicts are listed in yati_paadalu order. */
export function yatiVerdictForRow(
  rowNumber: number,
  typeInfo: TypeInfo,
  verdicts: boolean[],
): boolean | null {
  const index = typeInfo.yati_paadalu.indexOf(rowNumber);
  if (index === -1 || index >= verdicts.length) return null;
  return verdicts[index];
}

function cellNode(
  cell: GanamCell,
  cellIndex: number,
  typeInfo: TypeInfo | null,
  verdict: boolean | null,
): VNode {
  const unmatched = cell.matched_name === UNMATCHED;
  const [ysGanam, ysOffset] = typeInfo?.yati_sthanam ?? [-1, -1];
  const children = cell.tokens.map((t, tokenIndex) => {
    let extra = "";
    if (verdict !== null) {
      const isLineStart = cellIndex === 0 && tokenIndex === 0;
      const isYatiSthanam = cellIndex === ysGanam - 1 && tokenIndex === ysOffset;
      if (isLineStart || isYatiSthanam) {
        extra = verdict ? " yati yati-pass" : " yati yati-fail";
      }
    }
    if (typeInfo?.prasa && cellIndex === 0 && tokenIndex === 1) {
      extra += " prasa";
    }
    return aksharamNode(t.token, t.mark, extra);
  });
  return {
    tag: "span",
    className: unmatched ? "ganam-cell unmatched" : "ganam-cell",
    title: cell.matched_name,
    children: [
      { tag: "span", className: "ganam-name", text: cell.matched_name },
      { tag: "span", className: "ganam-tokens", children },
    ],
  };
}

function ganamGrid(response: AnalyzeResponse, typeInfo: TypeInfo | null): VNode {
  return {
    tag: "div",
    className: "ganam-grid",
    children: response.ganam_cells.map((row, rowIndex) => {
      const verdict = typeInfo
        ? yatiVerdictForRow(rowIndex + 1, typeInfo, response.yati_verdicts)
        : null;
      return {
        tag: "div",
        className: "ganam-row",
        children: row.map((cell, cellIndex) =>
          cellNode(cell, cellIndex, typeInfo, verdict),
        ),
      };
    }),
  };
}

function scoreGauge(response: AnalyzeResponse): VNode {
  const percent = Math.round(response.chandassu_score * 1000) / 10;
  return {
    tag: "div",
    className: "score-gauge",
    children: [
      {
        tag: "div",
        className: "gauge-total",
        text: `${percent}%`,
        title: "chandassu score",
      },
      {
        tag: "ul",
        className: "micro-scores",
        children: Object.entries(response.micro_scores).map(([key, value]) => ({
          tag: "li",
          className: "micro-score",
          text: `${key}: ${(100 * value).toFixed(2)}`,
        })),
      },
      ...(response.prasa_modal_aksharam
        ? [
            {
              tag: "div",
              className: "prasa-modal",
              text: `prasa: ${response.prasa_modal_aksharam}`,
            },
          ]
        : []),
    ],
  };
}

/** The full overlay for one response; an absent response gives a blank
 * overlay (empty draft, or nothing analyzed yet). */
export function buildOverlay(
  response: AnalyzeResponse | null,
  typeInfo: TypeInfo | null,
): VNode {
  if (response === null) {
    return { tag: "div", className: "overlay empty", children: [] };
  }
  return {
    tag: "div",
    className: "overlay",
    children: [
      { tag: "div", className: "detected-type", text: response.detected_type },
      scoreGauge(response),
      tokenLines(response),
      ganamGrid(response, typeInfo),
    ],
  };
}

function walk(node: VNode, visit: (node: VNode) => void): void {
  visit(node);
  for (const child of node.children ?? []) walk(child, visit);
}

function countByClass(root: VNode, name: string): number {
  let count = 0;
  walk(root, (node) => {
    const classes = (node.className ?? "").split(" ");
    if (classes.includes(name)) count++;
  });
  return count;
}

/** Aksharam nodes in the token-lines section (the editor view). */
export function overlayTokenCount(root: VNode): number {
  let count = 0;
  walk(root, (node) => {
    if (node.className === "token-lines") {
      count += countByClass(node, "aksharam");
    }
  });
  return count;
}

export function unmatchedCellCount(root: VNode): number {
  return countByClass(root, "unmatched");
}

export function responseTokenCount(response: AnalyzeResponse): number {
  return response.tokens.reduce((sum, line) => sum + line.length, 0);
}
