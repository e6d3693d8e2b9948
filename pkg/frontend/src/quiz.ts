import { ApiError } from "./api.js";
import type {
    ChallengeJson,
    FinishResult,
    SessionJson,
    SessionMode,
    SubmitResult,
} from "./types.js";

// Session flow for the arcade and learning quizzes. All judging, scoring and
// ranking happens server-side; this class only measures how long a challenge
// was on screen, forwards answers, and mirrors whatever score the server
// reports back. Duplicate submissions are guarded locally and absorbed if the
// server still sees one.

export interface Clock {
    now(): number;
}

export const systemClock: Clock = { now: () => Date.now() };

export interface QuizApi {
    createSession(mode: SessionMode, seed?: number, count?: number): Promise<SessionJson>;
    getSession(id: string): Promise<SessionJson>;
    submitAnswer(
        sessionId: string,
        challengeId: string,
        answer: string,
        elapsedMs: number,
    ): Promise<SubmitResult>;
    finishSession(sessionId: string, player: string, abandon?: boolean): Promise<FinishResult>;
}

export type SubmitStatus =
    | { kind: "judged"; result: SubmitResult }
    | { kind: "duplicate" }
    | { kind: "busy" }
    | { kind: "error"; message: string };

export class QuizFlow {
    private session: SessionJson | null = null;
    private index = 0;
    private shownAt = 0;
    private submitting = false;
    private lastScore = 0;
    private lastStreak = 0;
    private lastResult: SubmitResult | null = null;

    constructor(private api: QuizApi, private clock: Clock = systemClock) {}

    async start(mode: SessionMode, seed?: number, count?: number): Promise<SessionJson> {
        this.session = await this.api.createSession(mode, seed, count);
        this.index = 0;
        this.lastScore = this.session.score;
        this.lastStreak = this.session.streak;
        this.lastResult = null;
        this.markShown();
        return this.session;
    }

    get sessionId(): string | null {
        return this.session ? this.session.id : null;
    }

    get current(): ChallengeJson | null {
        if (!this.session || this.index >= this.session.challenges.length) {
            return null;
        }
        return this.session.challenges[this.index];
    }

    /** Server-reported score after the most recent answer. */
    get score(): number {
        return this.lastScore;
    }

    get streak(): number {
        return this.lastStreak;
    }

    get latest(): SubmitResult | null {
        return this.lastResult;
    }

    get total(): number {
        return this.session ? this.session.challenges.length : 0;
    }

    get answered(): number {
        return this.index;
    }

    get done(): boolean {
        return this.session !== null && this.index >= this.session.challenges.length;
    }

    /** Restart the on-screen timer; called whenever a challenge is shown. */
    markShown(): void {
        this.shownAt = this.clock.now();
    }

    private elapsedMs(): number {
        return Math.max(0, Math.round(this.clock.now() - this.shownAt));
    }

    async submit(answer: string): Promise<SubmitStatus> {
        const challenge = this.current;
        if (!this.session || !challenge) {
            return { kind: "error", message: "no active challenge" };
        }
        if (this.submitting) {
            return { kind: "busy" };
        }
        this.submitting = true;
        try {
            const result = await this.api.submitAnswer(
                this.session.id,
                challenge.id,
                answer,
                this.elapsedMs(),
            );
            this.lastScore = result.score;
            this.lastStreak = result.streak;
            this.lastResult = result;
            this.advance();
            return { kind: "judged", result };
        } catch (err) {
            if (err instanceof ApiError && err.status === 409) {
                this.advance();
                return { kind: "duplicate" };
            }
            const message = err instanceof ApiError ? err.detail : "network error";
            return { kind: "error", message };
        } finally {
            this.submitting = false;
        }
    }

    private advance(): void {
        this.index += 1;
        this.markShown();
    }

    async finish(player: string): Promise<FinishResult> {
        if (!this.session) {
            throw new Error("no session to finish");
        }
        return this.api.finishSession(this.session.id, player, !this.done);
    }
}
