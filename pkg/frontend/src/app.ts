import { ApiError, type PlaygroundApi } from "./api.js";
import { Debouncer } from "./debounce.js";
import { initialState, parseCellValue, SequenceGate, type PlaygroundState } from "./state.js";
import { flagUnbalanced, renderBadges, renderCaretError, renderMatrixGrid, renderReport } from "./render.js";

const SKELETON = `
<header class="topbar">
    <h1>ideal flow playground</h1>
    <div id="badges" class="badges"></div>
</header>
<main class="panes">
    <section id="signature-pane" class="pane">
        <h2>Signature</h2>
        <textarea id="sig-input" rows="3" spellcheck="false"
            placeholder="a + abcd + 3b + bd"></textarea>
        <pre id="sig-error" class="inline-error" hidden></pre>
        <p id="sig-empty" class="empty-note" hidden></p>
    </section>
    <section id="matrix-pane" class="pane">
        <h2>Flow matrix</h2>
        <div class="grid-wrap"><table id="matrix-grid"></table></div>
        <p id="matrix-status" class="status" hidden></p>
    </section>
    <section id="random-pane" class="pane">
        <h2>Random network</h2>
        <form id="random-form">
            <label>nodes <input id="random-nodes" value="4" inputmode="numeric"></label>
            <label>kappa <input id="random-kappa" value="12" inputmode="numeric"></label>
            <label>seed <input id="random-seed" value="1" inputmode="numeric"></label>
            <button id="random-go" type="submit">generate</button>
        </form>
        <p id="random-error" class="inline-error" hidden></p>
    </section>
</main>
<section id="report-pane" class="pane">
    <h2>Analysis</h2>
    <div id="report"></div>
</section>
`;

export class Playground {
    readonly state: PlaygroundState = initialState();

    private signatureGate = new SequenceGate();
    private matrixGate = new SequenceGate();
    private randomGate = new SequenceGate();
    private debouncer: Debouncer;
    private pending = new Set<Promise<void>>();

    private sigInput: HTMLTextAreaElement;
    private sigError: HTMLElement;
    private sigEmpty: HTMLElement;
    private signaturePane: HTMLElement;
    private matrixPane: HTMLElement;
    private grid: HTMLTableElement;
    private matrixStatus: HTMLElement;
    private badges: HTMLElement;
    private reportBox: HTMLElement;
    private randomError: HTMLElement;

    constructor(root: HTMLElement, private api: PlaygroundApi, debounceMs = 250) {
        this.debouncer = new Debouncer(debounceMs);
        root.innerHTML = SKELETON;
        const find = <T extends HTMLElement>(id: string): T => {
            const node = root.querySelector<T>(`#${id}`);
            if (!node) {
                throw new Error(`playground skeleton is missing #${id}`);
            }
            return node;
        };
        this.sigInput = find<HTMLTextAreaElement>("sig-input");
        this.sigError = find("sig-error");
        this.sigEmpty = find("sig-empty");
        this.signaturePane = find("signature-pane");
        this.matrixPane = find("matrix-pane");
        this.grid = find<HTMLTableElement>("matrix-grid");
        this.matrixStatus = find("matrix-status");
        this.badges = find("badges");
        this.reportBox = find("report");
        this.randomError = find("random-error");

        this.sigInput.addEventListener("input", () => {
            this.debouncer.debounce("signature", () => {
                this.track(this.submitSignature(this.sigInput.value));
            });
        });

        const form = find<HTMLFormElement>("random-form");
        form.addEventListener("submit", (event) => {
            event.preventDefault();
            const nodes = find<HTMLInputElement>("random-nodes").value;
            const kappa = find<HTMLInputElement>("random-kappa").value;
            const seed = find<HTMLInputElement>("random-seed").value;
            this.track(this.requestRandomRaw(nodes, kappa, seed));
        });

        this.showEmptyState("type a signature or generate a random network");
    }

    // Tests (and the debounced handlers) await this to know the view settled.
    async idle(): Promise<void> {
        while (this.pending.size > 0) {
            await Promise.allSettled([...this.pending]);
        }
    }

    private track(work: Promise<void>): void {
        this.pending.add(work);
        void work.finally(() => this.pending.delete(work));
    }

    private showEmptyState(note: string): void {
        this.state.report = null;
        this.state.nodes = [];
        this.state.matrix = [];
        renderBadges(this.badges, null);
        renderReport(this.reportBox, null);
        this.grid.replaceChildren();
        this.sigEmpty.hidden = false;
        this.sigEmpty.textContent = note;
        this.matrixStatus.hidden = true;
        this.matrixPane.classList.remove("stale");
        this.signaturePane.classList.remove("stale");
    }

    private clearSignatureError(): void {
        this.sigError.hidden = true;
        this.sigError.textContent = "";
    }

    private renderGrid(): void {
        const sums = this.state.report
            ? { rowSums: this.state.report.nodeFlowSums, columnSums: this.state.report.nodeFlowSums }
            : null;
        renderMatrixGrid(
            this.grid,
            this.state.nodes,
            this.state.matrix,
            (row, col, value) => {
                this.track(this.handleCellEdit(row, col, value));
            },
            sums,
        );
    }

    // signature pane flow: compose, then analyze, then re-render everything
    async submitSignature(text: string): Promise<void> {
        const token = this.signatureGate.next();
        this.state.signatureText = text;
        if (text.trim() === "") {
            this.clearSignatureError();
            this.showEmptyState("type a signature or generate a random network");
            this.state.mode = "signature-driven";
            return;
        }
        this.matrixPane.classList.add("stale");
        try {
            const composed = await this.api.compose(text);
            if (!this.signatureGate.isCurrent(token)) {
                return;
            }
            const report = await this.api.analyze(text);
            if (!this.signatureGate.isCurrent(token)) {
                return;
            }
            this.state.mode = "signature-driven";
            this.state.nodes = composed.nodes;
            this.state.matrix = composed.matrix;
            this.state.report = report;
            this.state.banner = null;
            this.clearSignatureError();
            this.sigEmpty.hidden = true;
            this.matrixStatus.hidden = true;
            renderBadges(this.badges, report);
            this.renderGrid();
            renderReport(this.reportBox, report);
        } catch (error) {
            if (!this.signatureGate.isCurrent(token)) {
                return;
            }
            this.showRequestError(error, (detail, position) => {
                renderCaretError(this.sigError, text, detail, position);
            });
        } finally {
            if (this.signatureGate.isCurrent(token)) {
                this.matrixPane.classList.remove("stale");
            }
        }
    }

    // matrix pane flow: check balance, then either decompose or flag nodes
    async handleCellEdit(row: number, col: number, rawValue: string): Promise<void> {
        const value = parseCellValue(rawValue);
        if (value === null) {
            this.matrixStatus.hidden = false;
            this.matrixStatus.textContent =
                `cell ${this.state.nodes[row]}→${this.state.nodes[col]}: ` +
                "flows must be nonnegative integers";
            const input = this.grid.querySelector<HTMLInputElement>(
                `input[data-row="${row}"][data-col="${col}"]`,
            );
            input?.classList.add("invalid");
            return;
        }
        const matrix = this.state.matrix.map((cells) => [...cells]);
        matrix[row][col] = value;
        const doc = { nodes: this.state.nodes, matrix };

        const token = this.matrixGate.next();
        this.signaturePane.classList.add("stale");
        try {
            const verdict = await this.api.check(doc);
            if (!this.matrixGate.isCurrent(token)) {
                return;
            }
            this.state.matrix = matrix;
            this.state.mode = "matrix-driven";
            if (!verdict.premagic) {
                renderMatrixGrid(
                    this.grid,
                    this.state.nodes,
                    matrix,
                    (r, c, v) => this.track(this.handleCellEdit(r, c, v)),
                    { rowSums: verdict.rowSums, columnSums: verdict.columnSums },
                );
                flagUnbalanced(this.grid, verdict.unbalanced);
                this.matrixStatus.hidden = false;
                this.matrixStatus.textContent =
                    `flow imbalance at: ${verdict.unbalanced.join(", ")} (outflow ≠ inflow)`;
                return; // signature pane stays stale until balance is restored
            }
            const decomposed = await this.api.decompose(doc);
            if (!this.matrixGate.isCurrent(token)) {
                return;
            }
            const signature = decomposed.signature ?? "";
            this.sigInput.value = signature;
            this.clearSignatureError();
            this.signaturePane.classList.remove("stale");
            this.matrixStatus.hidden = true;
            if (signature === "") {
                this.state.signatureText = "";
                this.showEmptyState("no flow");
                return;
            }
            await this.submitSignature(signature);
        } catch (error) {
            if (!this.matrixGate.isCurrent(token)) {
                return;
            }
            this.showRequestError(error, (detail) => {
                this.matrixStatus.hidden = false;
                this.matrixStatus.textContent = detail;
            });
        }
    }

    // random pane flow: fetch a signature, then run the signature flow
    async requestRandomRaw(nodes: string, kappa: string, seed: string): Promise<void> {
        const values = [nodes, kappa, seed].map((text) => parseCellValue(text));
        if (values.some((v) => v === null)) {
            this.randomError.hidden = false;
            this.randomError.textContent = "nodes, kappa, and seed must be nonnegative integers";
            return;
        }
        const [n, k, s] = values as number[];
        await this.requestRandom(n, k, s);
    }

    async requestRandom(nodes: number, kappa: number, seed: number): Promise<void> {
        const token = this.randomGate.next();
        try {
            const result = await this.api.random(nodes, kappa, seed);
            if (!this.randomGate.isCurrent(token)) {
                return;
            }
            this.randomError.hidden = true;
            this.randomError.textContent = "";
            this.sigInput.value = result.signature; // seed field is untouched, so the draw replays
            await this.submitSignature(result.signature);
        } catch (error) {
            if (!this.randomGate.isCurrent(token)) {
                return;
            }
            this.showRequestError(error, (detail) => {
                this.randomError.hidden = false;
                this.randomError.textContent =
                    error instanceof ApiError && error.code === "InfeasibleKappa"
                        ? `${detail} (kappa must be at least the number of nodes)`
                        : detail;
            });
        }
    }

    private showRequestError(error: unknown, present: (detail: string, position?: number) => void): void {
        if (error instanceof ApiError) {
            present(error.detail, error.position);
            return;
        }
        // network failures and bugs land in the banner, inputs stay put
        this.state.banner = error instanceof Error ? error.message : String(error);
        present(this.state.banner);
    }
}
