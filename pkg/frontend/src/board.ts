import { ApiError } from "./api.js";
import type { DiagramJson, EdgeJson, FailureReason, InterlockResult } from "./types.js";

// Assembly board: players drag premise pieces together and the server decides
// whether they interlock. A pair renders as snapped exactly when the most
// recent interlock response for it said so; nothing is judged client-side.

export interface BoardPiece {
    id: string;
    text: string;
    diagram: DiagramJson;
}

export type SnapOutcome =
    | { kind: "snapped"; pair: string; middleEdges: [EdgeJson, EdgeJson] }
    | { kind: "rejected"; pair: string; reason: FailureReason | null; middleEdges: [EdgeJson, EdgeJson] }
    | { kind: "error"; message: string }
    | { kind: "busy" };

export interface InterlockApi {
    interlock(major: string, minor: string): Promise<InterlockResult>;
}

function pairKey(a: BoardPiece, b: BoardPiece): string {
    return [a.id, b.id].sort().join("|");
}

export class Board {
    private pieces = new Map<string, BoardPiece>();
    private snapped = new Set<string>();
    private inFlight = false;
    private listeners: Array<(outcome: SnapOutcome) => void> = [];

    constructor(private api: InterlockApi) {}

    setPieces(pieces: BoardPiece[]): void {
        this.pieces = new Map(pieces.map((p) => [p.id, p]));
        this.snapped.clear();
    }

    piece(id: string): BoardPiece | undefined {
        return this.pieces.get(id);
    }

    allPieces(): BoardPiece[] {
        return [...this.pieces.values()];
    }

    isSnapped(a: BoardPiece, b: BoardPiece): boolean {
        return this.snapped.has(pairKey(a, b));
    }

    snappedPairs(): string[] {
        return [...this.snapped].sort();
    }

    get busy(): boolean {
        return this.inFlight;
    }

    onOutcome(listener: (outcome: SnapOutcome) => void): void {
        this.listeners.push(listener);
    }

    /**
     * Drop `dragged` onto `target`. The target reads as the major premise and
     * the dragged piece as the minor; interlocking is symmetric so the
     * assignment never changes the verdict. Only one attempt may be in
     * flight: further drops report busy until the server answers.
     */
    async snapAttempt(target: BoardPiece, dragged: BoardPiece): Promise<SnapOutcome> {
        if (this.inFlight) {
            return this.emit({ kind: "busy" });
        }
        this.inFlight = true;
        const pair = pairKey(target, dragged);
        try {
            const result = await this.api.interlock(target.text, dragged.text);
            if (result.interlocks) {
                this.snapped.add(pair);
                return this.emit({ kind: "snapped", pair, middleEdges: result.middleEdges });
            }
            this.snapped.delete(pair);
            return this.emit({
                kind: "rejected",
                pair,
                reason: result.failureReason ?? null,
                middleEdges: result.middleEdges,
            });
        } catch (err) {
            const message = err instanceof ApiError ? err.detail : "network error";
            return this.emit({ kind: "error", message });
        } finally {
            this.inFlight = false;
        }
    }

    private emit(outcome: SnapOutcome): SnapOutcome {
        for (const listener of this.listeners) {
            listener(outcome);
        }
        return outcome;
    }
}
