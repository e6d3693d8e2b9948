import { DASH_PATTERN, labelAnchors, pieceShape } from "./geometry.js";
import type { DiagramJson, ScoreEntryJson, SectionJson } from "./types.js";

// Thin DOM builders. Everything stateful lives in board.ts and quiz.ts; this
// module only turns data into elements.

const SVG_NS = "http://www.w3.org/2000/svg";

export function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    className?: string,
    text?: string,
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (className) {
        node.className = className;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}

export function pieceSvg(diagram: DiagramJson, label?: string): SVGSVGElement {
    const shape = pieceShape(diagram);
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", shape.viewBox);
    svg.setAttribute("class", "piece-svg");
    svg.setAttribute("role", "img");

    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", shape.path);
    path.setAttribute("class", shape.dashed ? "piece-outline negative" : "piece-outline");
    if (shape.dashed) {
        path.setAttribute("stroke-dasharray", DASH_PATTERN);
    }
    svg.appendChild(path);

    const anchors = labelAnchors(shape);
    svg.appendChild(termLabel(diagram.subject.term, anchors.subject));
    svg.appendChild(termLabel(diagram.predicate.term, anchors.predicate));
    if (label) {
        const caption = document.createElementNS(SVG_NS, "text");
        caption.setAttribute("x", String(shape.width / 2));
        caption.setAttribute("y", String(shape.height / 2 + 5));
        caption.setAttribute("class", "piece-caption");
        caption.setAttribute("text-anchor", "middle");
        caption.textContent = label;
        svg.appendChild(caption);
    }
    return svg;
}

function termLabel(term: string, [x, y]: [number, number]): SVGTextElement {
    const node = document.createElementNS(SVG_NS, "text");
    node.setAttribute("x", String(x));
    node.setAttribute("y", String(y + 5));
    node.setAttribute("class", "piece-term");
    node.setAttribute("text-anchor", "middle");
    node.textContent = term;
    return node;
}

export function sectionView(section: SectionJson): HTMLElement {
    const wrap = el("section", "page-section");
    wrap.appendChild(el("h3", undefined, section.heading));
    wrap.appendChild(el("p", undefined, section.body));
    return wrap;
}

export function rankingsTable(entries: ScoreEntryJson[]): HTMLElement {
    const table = el("table", "rankings");
    const head = el("tr");
    for (const col of ["#", "player", "score", "mode", "when"]) {
        head.appendChild(el("th", undefined, col));
    }
    table.appendChild(head);
    entries.forEach((entry, i) => {
        const row = el("tr");
        row.appendChild(el("td", undefined, String(i + 1)));
        row.appendChild(el("td", undefined, entry.player));
        row.appendChild(el("td", undefined, String(entry.score)));
        row.appendChild(el("td", undefined, entry.mode));
        row.appendChild(el("td", undefined, new Date(entry.timestamp).toLocaleDateString()));
        table.appendChild(row);
    });
    return table;
}

export function toast(message: string): void {
    const node = el("div", "toast", message);
    document.body.appendChild(node);
    setTimeout(() => node.remove(), 2600);
}
