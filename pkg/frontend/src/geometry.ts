import type { DiagramJson, EdgeJson } from "./types.js";

// Piece outlines are pure functions of the serialized diagram: the subject
// edge is the piece's left side, the predicate edge its right side. A knob
// is a semicircular bulge outward, a socket a rectangular notch inward, a
// negative sign dashes the outline, and a particular piece is half height.
// Polarity is never recomputed client-side; whatever the server serialized
// is what gets drawn.

export interface PieceSize {
    width: number;
    fullHeight: number;
    knobRadius: number;
    socketDepth: number;
}

export const DEFAULT_SIZE: PieceSize = {
    width: 120,
    fullHeight: 80,
    knobRadius: 12,
    socketDepth: 12,
};

export const DASH_PATTERN = "8 5";

export interface PieceShape {
    path: string;
    width: number;
    height: number;
    dashed: boolean;
    viewBox: string;
}

function rightEdge(edge: EdgeJson, size: PieceSize, height: number): string[] {
    const { width: w, knobRadius: r, socketDepth: d } = size;
    const cy = height / 2;
    if (edge.polarity === "knob") {
        return [`L ${w} ${cy - r}`, `A ${r} ${r} 0 0 1 ${w} ${cy + r}`, `L ${w} ${height}`];
    }
    return [
        `L ${w} ${cy - r}`,
        `L ${w - d} ${cy - r}`,
        `L ${w - d} ${cy + r}`,
        `L ${w} ${cy + r}`,
        `L ${w} ${height}`,
    ];
}

function leftEdge(edge: EdgeJson, size: PieceSize, height: number): string[] {
    const { knobRadius: r, socketDepth: d } = size;
    const cy = height / 2;
    if (edge.polarity === "knob") {
        return [`L 0 ${cy + r}`, `A ${r} ${r} 0 0 1 0 ${cy - r}`, `L 0 0`];
    }
    return [
        `L 0 ${cy + r}`,
        `L ${d} ${cy + r}`,
        `L ${d} ${cy - r}`,
        `L 0 ${cy - r}`,
        `L 0 0`,
    ];
}

/** Outline for one piece; clockwise from the top-left corner. */
export function pieceShape(diagram: DiagramJson, size: PieceSize = DEFAULT_SIZE): PieceShape {
    const height = diagram.quantity === "particular" ? size.fullHeight / 2 : size.fullHeight;
    const segments = [
        `M 0 0`,
        `L ${size.width} 0`,
        ...rightEdge(diagram.predicate, size, height),
        `L 0 ${height}`,
        ...leftEdge(diagram.subject, size, height),
        `Z`,
    ];
    const margin = size.knobRadius + 2;
    return {
        path: segments.join(" "),
        width: size.width,
        height,
        dashed: diagram.subject.sign === "negative",
        viewBox: `${-margin} -2 ${size.width + 2 * margin} ${height + 4}`,
    };
}

/** Where a piece's term labels sit, in the same coordinate space as the path. */
export function labelAnchors(shape: PieceShape): { subject: [number, number]; predicate: [number, number] } {
    return {
        subject: [18, shape.height / 2],
        predicate: [shape.width - 18, shape.height / 2],
    };
}
