import type { AnalysisReport, RationalCell } from "./api.js";

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    className?: string,
    text?: string,
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (className) {
        node.className = className;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}

export interface BadgeValues {
    kappa: number;
    premagic: boolean;
    irreducible: boolean;
    idealFlow: boolean;
}

export function renderBadges(container: HTMLElement, values: BadgeValues | null): void {
    container.replaceChildren();
    if (values === null) {
        return;
    }
    const kappa = el("span", "badge badge-kappa", `κ = ${values.kappa}`);
    kappa.id = "badge-kappa";
    container.append(kappa);
    const flags: [string, boolean][] = [
        ["premagic", values.premagic],
        ["irreducible", values.irreducible],
        ["ideal flow", values.idealFlow],
    ];
    for (const [label, on] of flags) {
        const badge = el("span", on ? "badge badge-on" : "badge badge-off");
        badge.textContent = `${label} ${on ? "✓" : "✗"}`;
        badge.dataset.flag = label.replace(" ", "-");
        badge.dataset.value = String(on);
        container.append(badge);
    }
}

export type CellEditHandler = (row: number, col: number, value: string) => void;

export interface GridSums {
    rowSums: Record<string, number>;
    columnSums: Record<string, number>;
}

export function renderMatrixGrid(
    table: HTMLTableElement,
    nodes: string[],
    matrix: number[][],
    onEdit: CellEditHandler,
    sums: GridSums | null,
): void {
    table.replaceChildren();
    if (nodes.length === 0) {
        return;
    }
    const head = el("thead");
    const headRow = el("tr");
    headRow.append(el("th"));
    for (const node of nodes) {
        const th = el("th", "col-head", node);
        th.dataset.node = node;
        headRow.append(th);
    }
    headRow.append(el("th", "sum-head", "Σ out"));
    head.append(headRow);
    table.append(head);

    const body = el("tbody");
    matrix.forEach((row, i) => {
        const tr = el("tr");
        const rowHead = el("th", "row-head", nodes[i]);
        rowHead.dataset.node = nodes[i];
        tr.append(rowHead);
        row.forEach((value, j) => {
            const td = el("td");
            const input = el("input");
            input.value = String(value);
            input.inputMode = "numeric";
            input.dataset.row = String(i);
            input.dataset.col = String(j);
            input.setAttribute("aria-label", `flow ${nodes[i]} to ${nodes[j]}`);
            input.addEventListener("change", () => onEdit(i, j, input.value));
            td.append(input);
            tr.append(td);
        });
        const rowSum = el("td", "row-sum");
        rowSum.dataset.node = nodes[i];
        rowSum.textContent = sums ? String(sums.rowSums[nodes[i]] ?? "") : "";
        tr.append(rowSum);
        body.append(tr);
    });
    table.append(body);

    const foot = el("tfoot");
    const footRow = el("tr");
    footRow.append(el("th", "sum-head", "Σ in"));
    for (const node of nodes) {
        const td = el("td", "col-sum");
        td.dataset.node = node;
        td.textContent = sums ? String(sums.columnSums[node] ?? "") : "";
        footRow.append(td);
    }
    footRow.append(el("td"));
    foot.append(footRow);
    table.append(foot);
}

export function flagUnbalanced(table: HTMLTableElement, unbalanced: string[]): void {
    const bad = new Set(unbalanced);
    for (const cell of table.querySelectorAll<HTMLElement>("[data-node]")) {
        cell.classList.toggle("unbalanced", bad.has(cell.dataset.node ?? ""));
    }
}

export function renderCaretError(container: HTMLElement, text: string, message: string, position?: number): void {
    container.hidden = false;
    if (position === undefined || position < 0 || position > text.length) {
        container.textContent = message;
        return;
    }
    container.textContent = `${text}\n${" ".repeat(position)}^\n${message}`;
}

function rationalText(cell: RationalCell): string {
    return String(cell);
}

function appendRationalTable(
    container: HTMLElement,
    title: string,
    nodes: string[],
    rows: RationalCell[][],
): void {
    container.append(el("h3", undefined, title));
    const table = el("table", "rational-table");
    const head = el("tr");
    head.append(el("th"));
    for (const node of nodes) {
        head.append(el("th", undefined, node));
    }
    table.append(head);
    rows.forEach((row, i) => {
        const tr = el("tr");
        tr.append(el("th", undefined, nodes[i]));
        for (const cell of row) {
            tr.append(el("td", undefined, rationalText(cell)));
        }
        table.append(tr);
    });
    container.append(table);
}

export function renderReport(container: HTMLElement, report: AnalysisReport | null): void {
    container.replaceChildren();
    if (report === null) {
        return;
    }
    const sums = el("p", "node-sums");
    sums.textContent = report.nodes
        .map((node) => `σ(${node}) = ${report.nodeFlowSums[node]}`)
        .join("   ");
    container.append(sums);

    appendRationalTable(container, "Link probabilities (f/κ)", report.nodes, report.probabilityMatrix);
    appendRationalTable(container, "Outflow stochastic (rows sum to 1)", report.nodes, report.outflowStochastic);
    appendRationalTable(container, "Inflow stochastic (columns sum to 1)", report.nodes, report.inflowStochastic);

    container.append(el("h3", undefined, "Pivots"));
    const list = el("ul", "pivot-list");
    if (report.pivots.length === 0) {
        list.append(el("li", undefined, "no overlapping cycle pairs"));
    }
    for (const entry of report.pivots) {
        const item = el("li");
        item.textContent = `${entry.cycles[0]} ∩ ${entry.cycles[1]}: ${entry.pivots.join(", ")}`;
        list.append(item);
    }
    container.append(list);
}
