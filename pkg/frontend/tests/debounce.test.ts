import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Debouncer } from "../src/debounce.js";

describe("Debouncer", () => {
    beforeEach(() => {
        vi.useFakeTimers();
    });

    afterEach(() => {
        vi.useRealTimers();
    });

    it("fires once after the delay", () => {
        const debouncer = new Debouncer(250);
        const calls: string[] = [];
        debouncer.debounce("k", () => calls.push("fired"));
        vi.advanceTimersByTime(249);
        expect(calls).toEqual([]);
        vi.advanceTimersByTime(1);
        expect(calls).toEqual(["fired"]);
    });

    it("collapses rapid calls to the newest", () => {
        const debouncer = new Debouncer(250);
        const calls: string[] = [];
        debouncer.debounce("k", () => calls.push("first"));
        vi.advanceTimersByTime(100);
        debouncer.debounce("k", () => calls.push("second"));
        vi.advanceTimersByTime(250);
        expect(calls).toEqual(["second"]);
    });

    it("tracks keys independently", () => {
        const debouncer = new Debouncer(250);
        const calls: string[] = [];
        debouncer.debounce("a", () => calls.push("a"));
        debouncer.debounce("b", () => calls.push("b"));
        vi.advanceTimersByTime(250);
        expect(calls.sort()).toEqual(["a", "b"]);
    });

    it("clear cancels a pending call", () => {
        const debouncer = new Debouncer(250);
        const calls: string[] = [];
        debouncer.debounce("k", () => calls.push("fired"));
        debouncer.clear("k");
        vi.advanceTimersByTime(500);
        expect(calls).toEqual([]);
    });
});
