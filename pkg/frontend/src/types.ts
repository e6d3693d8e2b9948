// Payload shapes of the game service JSON API. Field names are the wire
// contract; everything here mirrors the server serializers verbatim.

export type Polarity = "knob" | "socket";
export type Sign = "affirmative" | "negative";
export type Quantity = "universal" | "particular";
export type SessionMode = "arcade" | "learning-quiz";
export type ChallengeKind = "judge" | "assemble";

export type FailureReason =
    | "no-knob"
    | "two-knobs"
    | "two-negatives"
    | "sign-mismatch"
    | "illicit-major"
    | "illicit-minor"
    | "universal-premises-particular-conclusion";

export interface EdgeJson {
    term: string;
    polarity: Polarity;
    sign: Sign;
}

export interface DiagramJson {
    subject: EdgeJson;
    predicate: EdgeJson;
    quantity: Quantity;
}

export interface PieceJson {
    text: string;
    diagram: DiagramJson;
}

export interface TraceJson {
    middleEdges: [EdgeJson, EdgeJson];
    ipFormed: boolean;
    conclusionFit: boolean | null;
    failureReason?: FailureReason;
}

/** Domain size plus one extension array per term name. */
export interface CountermodelJson {
    domain: number;
    [term: string]: number | number[];
}

export interface DecideResult {
    syllogism: string;
    verdict: "valid" | "invalid";
    trace: TraceJson;
    mnemonic?: string;
    countermodel?: CountermodelJson;
}

export interface InterlockResult {
    interlocks: boolean;
    middleEdges: [EdgeJson, EdgeJson];
    failureReason?: FailureReason;
}

export interface ChallengeJson {
    id: string;
    kind: ChallengeKind;
    issuedAt: number;
    pieces: PieceJson[];
    // judge challenges only; assemble hides the conclusion
    syllogism?: string;
    conclusionPiece?: PieceJson;
}

export interface AnswerJson {
    challengeId: string;
    answer: string;
    elapsedMs: number;
    correct: boolean;
    delta: number;
}

export interface SessionJson {
    id: string;
    mode: SessionMode;
    seed: number;
    state: "active" | "finished";
    score: number;
    streak: number;
    count: number;
    answeredCount: number;
    challenges: ChallengeJson[];
    answers: AnswerJson[];
}

export interface SubmitResult {
    challengeId: string;
    correct: boolean;
    delta: number;
    score: number;
    streak: number;
    remaining: number;
}

export interface ScoreEntryJson {
    player: string;
    score: number;
    mode: SessionMode;
    timestamp: number;
    sessionId: string;
}

export interface FinishResult {
    entry: ScoreEntryJson;
    rank: number;
}

export interface RankingsJson {
    entries: ScoreEntryJson[];
}

export interface SectionJson {
    heading: string;
    body: string;
}

export interface PageJson {
    topic: string;
    title: string;
    sections: SectionJson[];
    quiz?: { mode: SessionMode; defaultCount: number };
}

export interface RandomSyllogismJson {
    syllogism: string;
    valid: boolean;
    mnemonic?: string;
}
