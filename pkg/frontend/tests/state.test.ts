import { describe, expect, it } from "vitest";

import { initialState, parseCellValue, SequenceGate } from "../src/state.js";

describe("SequenceGate", () => {
    it("treats the newest token as current", () => {
        const gate = new SequenceGate();
        const first = gate.next();
        expect(gate.isCurrent(first)).toBe(true);
        const second = gate.next();
        expect(gate.isCurrent(first)).toBe(false);
        expect(gate.isCurrent(second)).toBe(true);
    });
});

describe("parseCellValue", () => {
    it("accepts nonnegative integers", () => {
        expect(parseCellValue("0")).toBe(0);
        expect(parseCellValue("42")).toBe(42);
        expect(parseCellValue("  7 ")).toBe(7);
    });

    it("rejects everything else", () => {
        for (const bad of ["", "-1", "1.5", "2e3", "x", "1 2", "+3"]) {
            expect(parseCellValue(bad)).toBeNull();
        }
    });
});

describe("initialState", () => {
    it("starts signature-driven and empty", () => {
        const state = initialState();
        expect(state.mode).toBe("signature-driven");
        expect(state.signatureText).toBe("");
        expect(state.report).toBeNull();
        expect(state.nodes).toEqual([]);
    });
});
