import { describe, expect, it } from "vitest";

import { DEFAULT_SIZE, labelAnchors, pieceShape } from "../src/geometry.js";
import type { DiagramJson, EdgeJson, Polarity, Sign } from "../src/types.js";

function edge(term: string, polarity: Polarity, sign: Sign): EdgeJson {
    return { term, polarity, sign };
}

// The four statement shapes as the server serializes them.
const EVERY_S_IS_P: DiagramJson = {
    subject: edge("S", "knob", "affirmative"),
    predicate: edge("P", "socket", "affirmative"),
    quantity: "universal",
};

const NO_S_IS_P: DiagramJson = {
    subject: edge("S", "knob", "negative"),
    predicate: edge("P", "knob", "negative"),
    quantity: "universal",
};

const SOME_S_IS_P: DiagramJson = {
    subject: edge("S", "socket", "affirmative"),
    predicate: edge("P", "socket", "affirmative"),
    quantity: "particular",
};

const SOME_S_IS_NOT_P: DiagramJson = {
    subject: edge("S", "socket", "negative"),
    predicate: edge("P", "knob", "negative"),
    quantity: "particular",
};

describe("pieceShape", () => {
    it("draws the universal affirmative piece: left knob, right socket", () => {
        const shape = pieceShape(EVERY_S_IS_P);
        expect(shape.path).toBe(
            "M 0 0 L 120 0 L 120 28 L 108 28 L 108 52 L 120 52 L 120 80 L 0 80" +
                " L 0 52 A 12 12 0 0 1 0 28 L 0 0 Z",
        );
        expect(shape.height).toBe(80);
        expect(shape.dashed).toBe(false);
        expect(shape.viewBox).toBe("-14 -2 148 84");
    });

    it("draws the universal negative piece: knobs on both edges, dashed", () => {
        const shape = pieceShape(NO_S_IS_P);
        expect(shape.path).toBe(
            "M 0 0 L 120 0 L 120 28 A 12 12 0 0 1 120 52 L 120 80 L 0 80" +
                " L 0 52 A 12 12 0 0 1 0 28 L 0 0 Z",
        );
        expect(shape.dashed).toBe(true);
    });

    it("draws the particular affirmative piece: sockets both sides, half height", () => {
        const shape = pieceShape(SOME_S_IS_P);
        expect(shape.path).toBe(
            "M 0 0 L 120 0 L 120 8 L 108 8 L 108 32 L 120 32 L 120 40 L 0 40" +
                " L 0 32 L 12 32 L 12 8 L 0 8 L 0 0 Z",
        );
        expect(shape.height).toBe(40);
        expect(shape.dashed).toBe(false);
        expect(shape.viewBox).toBe("-14 -2 148 44");
    });

    it("draws the particular negative piece: left socket, right knob, dashed", () => {
        const shape = pieceShape(SOME_S_IS_NOT_P);
        expect(shape.path).toBe(
            "M 0 0 L 120 0 L 120 8 A 12 12 0 0 1 120 32 L 120 40 L 0 40" +
                " L 0 32 L 12 32 L 12 8 L 0 8 L 0 0 Z",
        );
        expect(shape.height).toBe(40);
        expect(shape.dashed).toBe(true);
    });

    it("keeps knob arcs outside the body and socket notches inside it", () => {
        const knobbed = pieceShape(NO_S_IS_P);
        // Arc sweep flag 1 on both vertical edges bulges away from the body.
        expect(knobbed.path).toContain("A 12 12 0 0 1 120 52");
        expect(knobbed.path).toContain("A 12 12 0 0 1 0 28");
        const notched = pieceShape(SOME_S_IS_P);
        // Socket corners sit strictly between the side walls.
        expect(notched.path).toContain("L 108 8");
        expect(notched.path).toContain("L 12 32");
        expect(notched.path).not.toContain("A ");
    });

    it("is a pure function of the serialized diagram, not of the statement text", () => {
        // A lying diagram that claims knob/knob for a particular statement
        // must be drawn exactly as serialized: the client never recomputes
        // polarity from the form.
        const lying: DiagramJson = {
            subject: edge("X", "knob", "affirmative"),
            predicate: edge("Y", "knob", "affirmative"),
            quantity: "particular",
        };
        const shape = pieceShape(lying);
        expect(shape.path).toContain("A 12 12 0 0 1 120 32");
        expect(shape.path).toContain("A 12 12 0 0 1 0 8");
        expect(shape.height).toBe(40);
        expect(shape.dashed).toBe(false);
    });

    it("is deterministic", () => {
        const a = pieceShape(EVERY_S_IS_P);
        const b = pieceShape(EVERY_S_IS_P);
        expect(a).toEqual(b);
    });

    it("scales with a custom size", () => {
        const shape = pieceShape(EVERY_S_IS_P, {
            width: 60,
            fullHeight: 40,
            knobRadius: 6,
            socketDepth: 6,
        });
        expect(shape.path).toBe(
            "M 0 0 L 60 0 L 60 14 L 54 14 L 54 26 L 60 26 L 60 40 L 0 40" +
                " L 0 26 A 6 6 0 0 1 0 14 L 0 0 Z",
        );
        expect(shape.viewBox).toBe("-8 -2 76 44");
    });
});

describe("labelAnchors", () => {
    it("centers the term labels on their own edges", () => {
        const anchors = labelAnchors(pieceShape(EVERY_S_IS_P));
        expect(anchors.subject).toEqual([18, 40]);
        expect(anchors.predicate).toEqual([DEFAULT_SIZE.width - 18, 40]);
    });

    it("tracks the half height of particular pieces", () => {
        const anchors = labelAnchors(pieceShape(SOME_S_IS_P));
        expect(anchors.subject[1]).toBe(20);
    });
});
