import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

interface Recorded {
    url: string;
    init?: RequestInit;
}

function jsonResponse(body: unknown, status = 200): Response {
    return new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
    });
}

/** Client whose fetch records every request and replays canned responses. */
function stubClient(replies: Response[]): { client: ApiClient; log: Recorded[] } {
    const log: Recorded[] = [];
    const client = new ApiClient("http://game", async (url, init) => {
        log.push({ url, init });
        const next = replies.shift();
        if (!next) {
            throw new Error("no canned reply left");
        }
        return next;
    });
    return { client, log };
}

function sentBody(entry: Recorded): unknown {
    return JSON.parse(String(entry.init?.body));
}

describe("ApiClient request shapes", () => {
    it("posts a decide request and returns the parsed result", async () => {
        const { client, log } = stubClient([
            jsonResponse({ syllogism: "MAP SAM ∴ SAP", verdict: "valid", trace: {} }),
        ]);
        const result = await client.decide("MAP SAM ∴ SAP");
        expect(result.verdict).toBe("valid");
        expect(log[0].url).toBe("http://game/api/decide");
        expect(log[0].init?.method).toBe("POST");
        expect(log[0].init?.headers).toEqual({ "content-type": "application/json" });
        expect(sentBody(log[0])).toEqual({ syllogism: "MAP SAM ∴ SAP" });
    });

    it("posts interlock with major and minor premises", async () => {
        const { client, log } = stubClient([
            jsonResponse({ interlocks: true, middleEdges: [] }),
        ]);
        await client.interlock("MAP", "SAM");
        expect(log[0].url).toBe("http://game/api/interlock");
        expect(sentBody(log[0])).toEqual({ major: "MAP", minor: "SAM" });
    });

    it("omits unset seed and count when creating a session", async () => {
        const { client, log } = stubClient([jsonResponse({ id: "s1", challenges: [] }, 201)]);
        await client.createSession("arcade");
        expect(log[0].url).toBe("http://game/api/sessions");
        expect(sentBody(log[0])).toEqual({ mode: "arcade" });
    });

    it("sends seed and count when given", async () => {
        const { client, log } = stubClient([jsonResponse({ id: "s1", challenges: [] }, 201)]);
        await client.createSession("learning-quiz", 42, 5);
        expect(sentBody(log[0])).toEqual({ mode: "learning-quiz", seed: 42, count: 5 });
    });

    it("fetches a session by escaped id", async () => {
        const { client, log } = stubClient([jsonResponse({ id: "a/b" })]);
        await client.getSession("a/b");
        expect(log[0].url).toBe("http://game/api/sessions/a%2Fb");
        expect(log[0].init).toBeUndefined();
    });

    it("submits answers with challenge id, answer and elapsed time", async () => {
        const { client, log } = stubClient([
            jsonResponse({
                challengeId: "c1",
                correct: true,
                delta: 145,
                score: 145,
                streak: 1,
                remaining: 9,
            }),
        ]);
        const result = await client.submitAnswer("s1", "c1", "valid", 1500);
        expect(result.delta).toBe(145);
        expect(log[0].url).toBe("http://game/api/sessions/s1/answers");
        expect(sentBody(log[0])).toEqual({
            challengeId: "c1",
            answer: "valid",
            elapsedMs: 1500,
        });
    });

    it("finishes a session, abandoning only when asked", async () => {
        const finished = jsonResponse({ entry: { player: "p" }, rank: 1 });
        const abandoned = jsonResponse({ entry: { player: "p" }, rank: 2 });
        const { client, log } = stubClient([finished, abandoned]);
        await client.finishSession("s1", "p");
        expect(sentBody(log[0])).toEqual({ player: "p", abandon: false });
        await client.finishSession("s1", "p", true);
        expect(sentBody(log[1])).toEqual({ player: "p", abandon: true });
        expect(log[1].url).toBe("http://game/api/sessions/s1/finish");
    });

    it("queries rankings with optional mode and limit", async () => {
        const { client, log } = stubClient([
            jsonResponse({ entries: [] }),
            jsonResponse({ entries: [] }),
        ]);
        await client.rankings();
        expect(log[0].url).toBe("http://game/api/rankings");
        await client.rankings("arcade", 10);
        expect(log[1].url).toBe("http://game/api/rankings?mode=arcade&limit=10");
    });

    it("escapes learning topics", async () => {
        const { client, log } = stubClient([jsonResponse({ topic: "x", sections: [] })]);
        await client.learningPage("what is this");
        expect(log[0].url).toBe("http://game/api/learning/what%20is%20this");
    });

    it("passes seed and validity filter to the random generator", async () => {
        const { client, log } = stubClient([jsonResponse({ syllogism: "MAP SAM ∴ SAP" })]);
        await client.randomSyllogism(7, true);
        expect(log[0].url).toBe("http://game/api/syllogisms/random?seed=7&valid=true");
    });
});

describe("ApiClient error mapping", () => {
    it("raises ApiError with the server detail and position", async () => {
        const { client } = stubClient([
            jsonResponse({ detail: "parse error at index 2", position: 2 }, 400),
        ]);
        const err = await client.decide("XX").catch((e) => e);
        expect(err).toBeInstanceOf(ApiError);
        expect(err.status).toBe(400);
        expect(err.detail).toBe("parse error at index 2");
        expect(err.position).toBe(2);
        expect(err.message).toBe("400: parse error at index 2");
    });

    it("keeps the status text when the error body is not JSON", async () => {
        const { client } = stubClient([
            new Response("boom", { status: 502, statusText: "Bad Gateway" }),
        ]);
        const err = await client.rankings().catch((e) => e);
        expect(err).toBeInstanceOf(ApiError);
        expect(err.status).toBe(502);
        expect(err.detail).toBe("Bad Gateway");
        expect(err.position).toBeUndefined();
    });

    it("stringifies structured validation details", async () => {
        const { client } = stubClient([
            jsonResponse({ detail: [{ loc: ["body", "mode"], msg: "bad" }] }, 422),
        ]);
        const err = await client.createSession("arcade").catch((e) => e);
        expect(err).toBeInstanceOf(ApiError);
        expect(err.detail).toContain('"mode"');
    });
});
