import type { AnalysisReport } from "./api.js";

export type Mode = "signature-driven" | "matrix-driven";

export interface PlaygroundState {
    signatureText: string;
    nodes: string[];
    matrix: number[][];
    report: AnalysisReport | null;
    banner: string | null;
    mode: Mode;
}

export function initialState(): PlaygroundState {
    return {
        signatureText: "",
        nodes: [],
        matrix: [],
        report: null,
        banner: null,
        mode: "signature-driven",
    };
}

// One gate per pane: a response is applied only if no newer request for the
// same pane was issued while it was in flight.
export class SequenceGate {
    private latest = 0;

    next(): number {
        return ++this.latest;
    }

    isCurrent(token: number): boolean {
        return token === this.latest;
    }
}

// Cells accept nonnegative integers only; anything else is rejected inline.
export function parseCellValue(text: string): number | null {
    const trimmed = text.trim();
    if (!/^\d+$/.test(trimmed)) {
        return null;
    }
    return Number(trimmed);
}
