import { ApiClient, ApiError } from "./api.js";
import { Board, type BoardPiece } from "./board.js";
import { loadPage, TOPIC_ORDER } from "./learning.js";
import { QuizFlow } from "./quiz.js";
import { el, pieceSvg, rankingsTable, sectionView, toast } from "./render.js";
import type { ChallengeJson, FailureReason, SessionMode } from "./types.js";

declare global {
    interface Window {
        DASASAP_API?: string;
    }
}

const api = new ApiClient(window.DASASAP_API ?? "");

const REASON_TEXT: Record<FailureReason, string> = {
    "no-knob": "neither middle edge is a knob, so there is nothing to grip",
    "two-knobs": "both middle edges are knobs and they collide",
    "two-negatives": "two negative premises never interlock",
    "sign-mismatch": "the conclusion's sign does not match the premises",
    "illicit-major": "the predicate piece sticks out past its premise",
    "illicit-minor": "the subject piece sticks out past its premise",
    "universal-premises-particular-conclusion":
        "two universal premises cannot carry a particular conclusion",
};

let activeTimer: number | undefined;

function root(): HTMLElement {
    const node = document.getElementById("app");
    if (!node) {
        throw new Error("missing #app container");
    }
    return node;
}

function screen(): HTMLElement {
    if (activeTimer !== undefined) {
        clearInterval(activeTimer);
        activeTimer = undefined;
    }
    const host = root();
    host.replaceChildren();
    return host;
}

function describe(err: unknown): string {
    return err instanceof ApiError ? err.detail : "network error";
}

function link(label: string, hash: string, className = "nav-link"): HTMLElement {
    const a = el("a", className, label);
    a.setAttribute("href", hash);
    return a;
}

// home

function homeScreen(): void {
    const host = screen();
    host.appendChild(el("h1", "title", "dasasap"));
    host.appendChild(
        el("p", "tagline", "Snap premise pieces together and see which conclusions hold."),
    );
    const menu = el("div", "menu");
    menu.appendChild(link("Arcade", "#/arcade", "menu-button"));
    menu.appendChild(link("Learn", "#/learn", "menu-button"));
    menu.appendChild(link("Leaderboard", "#/leaderboard", "menu-button"));
    host.appendChild(menu);
}

// quiz screens (arcade and learning quiz share the flow)

async function quizScreen(mode: SessionMode, count?: number): Promise<void> {
    const host = screen();
    host.appendChild(el("p", "status", "dealing pieces..."));
    const flow = new QuizFlow(api);
    try {
        await flow.start(mode, undefined, count);
    } catch (err) {
        host.replaceChildren(el("p", "error", describe(err)));
        host.appendChild(link("back", "#/"));
        return;
    }
    renderChallenge(flow);
}

function renderChallenge(flow: QuizFlow): void {
    const host = screen();
    const challenge = flow.current;
    if (!challenge) {
        renderFinish(flow, host);
        return;
    }
    host.appendChild(quizHeader(flow));
    const feedback = flow.latest;
    if (feedback) {
        const note = feedback.correct ? `+${feedback.delta}` : "no points";
        host.appendChild(
            el("p", feedback.correct ? "feedback good" : "feedback bad", note),
        );
    }
    flow.markShown();
    if (challenge.kind === "judge") {
        renderJudge(flow, challenge, host);
    } else {
        renderAssemble(flow, challenge, host);
    }
    host.appendChild(finishEarlyLink(flow));
}

function quizHeader(flow: QuizFlow): HTMLElement {
    const head = el("div", "quiz-header");
    head.appendChild(el("span", "score", `score ${flow.score}`));
    head.appendChild(el("span", "streak", `streak ${flow.streak}`));
    head.appendChild(
        el("span", "progress", `${Math.min(flow.answered + 1, flow.total)}/${flow.total}`),
    );
    const timer = el("span", "timer", "0s");
    head.appendChild(timer);
    const started = Date.now();
    let shown = 0;
    activeTimer = window.setInterval(() => {
        shown = Math.max(shown, Math.floor((Date.now() - started) / 1000));
        timer.textContent = `${shown}s`;
    }, 250);
    return head;
}

function piecesRow(challenge: ChallengeJson): HTMLElement {
    const row = el("div", "pieces-row");
    for (const piece of challenge.pieces) {
        const cell = el("div", "piece");
        cell.appendChild(pieceSvg(piece.diagram));
        cell.appendChild(el("div", "piece-text", piece.text));
        row.appendChild(cell);
    }
    return row;
}

function renderJudge(flow: QuizFlow, challenge: ChallengeJson, host: HTMLElement): void {
    host.appendChild(el("h2", undefined, "Does the conclusion piece fit?"));
    if (challenge.syllogism) {
        host.appendChild(el("p", "syllogism", challenge.syllogism));
    }
    host.appendChild(piecesRow(challenge));
    if (challenge.conclusionPiece) {
        const cell = el("div", "piece conclusion");
        cell.appendChild(pieceSvg(challenge.conclusionPiece.diagram));
        cell.appendChild(el("div", "piece-text", challenge.conclusionPiece.text));
        host.appendChild(cell);
    }
    const buttons = el("div", "answer-buttons");
    for (const verdict of ["valid", "invalid"] as const) {
        const button = el("button", "answer", verdict);
        button.addEventListener("click", () => void answer(flow, verdict));
        buttons.appendChild(button);
    }
    host.appendChild(buttons);
}

function renderAssemble(flow: QuizFlow, challenge: ChallengeJson, host: HTMLElement): void {
    host.appendChild(el("h2", undefined, "Assemble a conclusion"));
    host.appendChild(
        el(
            "p",
            "hint",
            "Click one premise piece, then the other, to test how they interlock. " +
                "Then type a conclusion that the pair supports.",
        ),
    );
    const board = new Board(api);
    board.setPieces(
        challenge.pieces.map((piece, i) => ({
            id: `${challenge.id}:${i}`,
            text: piece.text,
            diagram: piece.diagram,
        })),
    );
    const row = el("div", "pieces-row");
    const cells = new Map<string, HTMLElement>();
    let selected: BoardPiece | null = null;
    const outcomeLine = el("p", "board-outcome", "");

    for (const piece of board.allPieces()) {
        const cell = el("div", "piece draggable");
        cell.appendChild(pieceSvg(piece.diagram));
        cell.appendChild(el("div", "piece-text", piece.text));
        cells.set(piece.id, cell);
        cell.addEventListener("click", () => void tryFit(piece));
        row.appendChild(cell);
    }
    host.appendChild(row);
    host.appendChild(outcomeLine);

    async function tryFit(piece: BoardPiece): Promise<void> {
        if (!selected) {
            selected = piece;
            cells.get(piece.id)?.classList.add("selected");
            return;
        }
        if (selected.id === piece.id) {
            cells.get(piece.id)?.classList.remove("selected");
            selected = null;
            return;
        }
        const dragged = selected;
        selected = null;
        const outcome = await board.snapAttempt(piece, dragged);
        cells.get(dragged.id)?.classList.remove("selected");
        for (const cell of cells.values()) {
            cell.classList.toggle("snapped", outcome.kind === "snapped");
        }
        if (outcome.kind === "snapped") {
            const edges = outcome.middleEdges
                .map((edge) => `${edge.term}:${edge.polarity}`)
                .join(" | ");
            outcomeLine.textContent = `snapped: ${edges}`;
        } else if (outcome.kind === "rejected") {
            outcomeLine.textContent = outcome.reason
                ? REASON_TEXT[outcome.reason]
                : "the pieces do not fit";
        } else if (outcome.kind === "error") {
            toast(outcome.message);
        }
    }

    const form = el("div", "conclusion-form");
    const input = el("input") as HTMLInputElement;
    input.placeholder = "conclusion, e.g. SAP";
    const button = el("button", "answer", "submit");
    button.addEventListener("click", () => {
        const text = input.value.trim();
        if (text) {
            void answer(flow, text);
        }
    });
    input.addEventListener("keydown", (event) => {
        if (event.key === "Enter") {
            button.click();
        }
    });
    form.appendChild(input);
    form.appendChild(button);
    host.appendChild(form);
}

async function answer(flow: QuizFlow, text: string): Promise<void> {
    const status = await flow.submit(text);
    if (status.kind === "error") {
        toast(status.message);
        return;
    }
    if (status.kind === "busy") {
        return;
    }
    renderChallenge(flow);
}

function finishEarlyLink(flow: QuizFlow): HTMLElement {
    const a = el("a", "finish-early", "finish early");
    a.setAttribute("href", "#");
    a.addEventListener("click", (event) => {
        event.preventDefault();
        renderFinish(flow, screen());
    });
    return a;
}

function renderFinish(flow: QuizFlow, host: HTMLElement): void {
    host.appendChild(el("h2", undefined, "Round over"));
    host.appendChild(
        el("p", "final", `final score ${flow.score} (${flow.answered}/${flow.total} answered)`),
    );
    const form = el("div", "finish-form");
    const input = el("input") as HTMLInputElement;
    input.placeholder = "player name";
    input.value = "anon";
    const button = el("button", "answer", "post score");
    button.addEventListener("click", async () => {
        button.disabled = true;
        try {
            const result = await flow.finish(input.value.trim() || "anon");
            const done = screen();
            done.appendChild(el("h2", undefined, `ranked #${result.rank}`));
            done.appendChild(
                el("p", undefined, `${result.entry.player}: ${result.entry.score} points`),
            );
            done.appendChild(link("leaderboard", "#/leaderboard"));
            done.appendChild(link("home", "#/"));
        } catch (err) {
            button.disabled = false;
            toast(describe(err));
        }
    });
    form.appendChild(input);
    form.appendChild(button);
    host.appendChild(form);
    host.appendChild(link("skip", "#/"));
}

// learning

async function learnMenu(): Promise<void> {
    const host = screen();
    host.appendChild(el("h1", undefined, "Learn"));
    const list = el("div", "menu");
    for (const topic of TOPIC_ORDER) {
        list.appendChild(link(topic.replace(/-/g, " "), `#/learn/${topic}`, "menu-button"));
    }
    host.appendChild(list);
    host.appendChild(link("home", "#/"));
}

async function learnTopic(topic: string): Promise<void> {
    const host = screen();
    host.appendChild(el("p", "status", "loading..."));
    const view = await loadPage(api, topic);
    host.replaceChildren();
    if (view.kind === "missing") {
        host.appendChild(el("h1", undefined, "No such page"));
        host.appendChild(el("p", undefined, `nothing here about ${view.topic}`));
        host.appendChild(link("back to topics", "#/learn"));
        return;
    }
    if (view.kind === "error") {
        host.appendChild(el("p", "error", view.message));
        host.appendChild(link("back to topics", "#/learn"));
        return;
    }
    const page = view.page;
    host.appendChild(el("h1", undefined, page.title));
    for (const section of page.sections) {
        host.appendChild(sectionView(section));
    }
    if (page.quiz) {
        const quiz = page.quiz;
        const button = el("button", "answer", "start the quiz");
        button.addEventListener("click", () => void quizScreen(quiz.mode, quiz.defaultCount));
        host.appendChild(button);
    }
    host.appendChild(link("back to topics", "#/learn"));
}

// leaderboard

async function leaderboardScreen(): Promise<void> {
    const host = screen();
    host.appendChild(el("h1", undefined, "Leaderboard"));
    try {
        const rankings = await api.rankings(undefined, 20);
        if (rankings.entries.length === 0) {
            host.appendChild(el("p", undefined, "no scores posted yet"));
        } else {
            host.appendChild(rankingsTable(rankings.entries));
        }
    } catch (err) {
        host.appendChild(el("p", "error", describe(err)));
    }
    host.appendChild(link("home", "#/"));
}

// router

function route(): void {
    const hash = window.location.hash || "#/";
    if (hash === "#/" || hash === "#") {
        homeScreen();
    } else if (hash === "#/arcade") {
        void quizScreen("arcade");
    } else if (hash === "#/learn") {
        void learnMenu();
    } else if (hash.startsWith("#/learn/")) {
        void learnTopic(hash.slice("#/learn/".length));
    } else if (hash === "#/leaderboard") {
        void leaderboardScreen();
    } else {
        homeScreen();
    }
}

window.addEventListener("hashchange", route);
window.addEventListener("DOMContentLoaded", route);
