// Keyed debounce: one pending call per key, the newest wins.

export class Debouncer {
    private timeouts = new Map<string, ReturnType<typeof setTimeout>>();

    constructor(private delayMs: number) {}

    debounce(key: string, func: () => void): void {
        const pending = this.timeouts.get(key);
        if (pending !== undefined) {
            clearTimeout(pending);
        }
        this.timeouts.set(key, setTimeout(() => {
            this.timeouts.delete(key);
            func();
        }, this.delayMs));
    }

    clear(key: string): void {
        const pending = this.timeouts.get(key);
        if (pending !== undefined) {
            clearTimeout(pending);
            this.timeouts.delete(key);
        }
    }
}
