import type {
    DecideResult,
    FinishResult,
    InterlockResult,
    PageJson,
    RandomSyllogismJson,
    RankingsJson,
    SessionJson,
    SessionMode,
    SubmitResult,
} from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Non-2xx response, with whatever diagnostic the server attached. */
export class ApiError extends Error {
    constructor(
        public readonly status: number,
        public readonly detail: string,
        public readonly position?: number,
    ) {
        super(`${status}: ${detail}`);
        this.name = "ApiError";
    }
}

async function raiseForStatus(response: Response): Promise<void> {
    if (response.ok) {
        return;
    }
    let detail = response.statusText;
    let position: number | undefined;
    try {
        const body = await response.json();
        if (typeof body.detail === "string") {
            detail = body.detail;
        } else if (body.detail !== undefined) {
            detail = JSON.stringify(body.detail);
        }
        if (typeof body.position === "number") {
            position = body.position;
        }
    } catch {
        // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail, position);
}

/** Typed client for the game service. All state lives server-side. */
export class ApiClient {
    constructor(
        private readonly baseUrl: string = "",
        private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async get<T>(path: string): Promise<T> {
        const response = await this.fetchImpl(this.baseUrl + path);
        await raiseForStatus(response);
        return (await response.json()) as T;
    }

    private async post<T>(path: string, body: unknown): Promise<T> {
        const response = await this.fetchImpl(this.baseUrl + path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        });
        await raiseForStatus(response);
        return (await response.json()) as T;
    }

    decide(syllogism: string): Promise<DecideResult> {
        return this.post("/api/decide", { syllogism });
    }

    interlock(major: string, minor: string): Promise<InterlockResult> {
        return this.post("/api/interlock", { major, minor });
    }

    createSession(mode: SessionMode, seed?: number, count?: number): Promise<SessionJson> {
        return this.post("/api/sessions", { mode, seed, count });
    }

    getSession(id: string): Promise<SessionJson> {
        return this.get(`/api/sessions/${encodeURIComponent(id)}`);
    }

    submitAnswer(
        sessionId: string,
        challengeId: string,
        answer: string,
        elapsedMs: number,
    ): Promise<SubmitResult> {
        return this.post(`/api/sessions/${encodeURIComponent(sessionId)}/answers`, {
            challengeId,
            answer,
            elapsedMs,
        });
    }

    finishSession(sessionId: string, player: string, abandon = false): Promise<FinishResult> {
        return this.post(`/api/sessions/${encodeURIComponent(sessionId)}/finish`, {
            player,
            abandon,
        });
    }

    rankings(mode?: SessionMode, limit?: number): Promise<RankingsJson> {
        const query = new URLSearchParams();
        if (mode !== undefined) {
            query.set("mode", mode);
        }
        if (limit !== undefined) {
            query.set("limit", String(limit));
        }
        const suffix = query.size > 0 ? `?${query.toString()}` : "";
        return this.get(`/api/rankings${suffix}`);
    }

    learningPage(topic: string): Promise<PageJson> {
        return this.get(`/api/learning/${encodeURIComponent(topic)}`);
    }

    randomSyllogism(seed?: number, valid?: boolean): Promise<RandomSyllogismJson> {
        const query = new URLSearchParams();
        if (seed !== undefined) {
            query.set("seed", String(seed));
        }
        if (valid !== undefined) {
            query.set("valid", String(valid));
        }
        const suffix = query.size > 0 ? `?${query.toString()}` : "";
        return this.get(`/api/syllogisms/random${suffix}`);
    }
}
