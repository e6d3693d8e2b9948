import { ApiError } from "./api.js";
import type { PageJson } from "./types.js";

// Learning section: static pages served by the backend, in a fixed reading
// order, with the last page carrying a quiz descriptor that launches a
// learning-mode session.

export const TOPIC_ORDER = [
    "what-is-logic",
    "what-is-a-syllogism",
    "what-is-dasasap",
    "so-you-think-you-are-logical",
] as const;

export type LearningView =
    | { kind: "page"; page: PageJson }
    | { kind: "missing"; topic: string }
    | { kind: "error"; message: string };

export interface LearningApi {
    learningPage(topic: string): Promise<PageJson>;
}

export async function loadPage(api: LearningApi, topic: string): Promise<LearningView> {
    try {
        return { kind: "page", page: await api.learningPage(topic) };
    } catch (err) {
        if (err instanceof ApiError && err.status === 404) {
            return { kind: "missing", topic };
        }
        const message = err instanceof ApiError ? err.detail : "network error";
        return { kind: "error", message };
    }
}

export function nextTopic(topic: string): string | null {
    const i = TOPIC_ORDER.indexOf(topic as (typeof TOPIC_ORDER)[number]);
    if (i < 0 || i + 1 >= TOPIC_ORDER.length) {
        return null;
    }
    return TOPIC_ORDER[i + 1];
}
