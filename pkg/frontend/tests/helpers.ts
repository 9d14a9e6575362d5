import type {
    AnalysisReport,
    CheckResponse,
    ComposeResponse,
    PlaygroundApi,
} from "../src/api.js";
import { Playground } from "../src/app.js";

export function makePlayground(api: PlaygroundApi, debounceMs = 0) {
    const root = document.createElement("div");
    document.body.append(root);
    const playground = new Playground(root, api, debounceMs);
    return { playground, root };
}

export function gridValues(root: HTMLElement): number[][] {
    const inputs = [...root.querySelectorAll<HTMLInputElement>("#matrix-grid input")];
    const size = Math.sqrt(inputs.length);
    const matrix: number[][] = Array.from({ length: size }, () => Array(size).fill(0));
    for (const input of inputs) {
        matrix[Number(input.dataset.row)][Number(input.dataset.col)] = Number(input.value);
    }
    return matrix;
}

export function apiStub(overrides: Partial<PlaygroundApi>): PlaygroundApi {
    const unexpected = (name: string) => () => {
        throw new Error(`unexpected API call: ${name}`);
    };
    return {
        compose: overrides.compose ?? unexpected("compose"),
        analyze: overrides.analyze ?? unexpected("analyze"),
        check: overrides.check ?? unexpected("check"),
        decompose: overrides.decompose ?? unexpected("decompose"),
        random: overrides.random ?? unexpected("random"),
    } as PlaygroundApi;
}

export function deferred<T>() {
    let resolve!: (value: T) => void;
    let reject!: (reason?: unknown) => void;
    const promise = new Promise<T>((res, rej) => {
        resolve = res;
        reject = rej;
    });
    return { promise, resolve, reject };
}

// canned server responses for a two-node network with flow 2 each way
export const TWO_NODE: ComposeResponse = {
    nodes: ["a", "b"],
    matrix: [
        [0, 2],
        [2, 0],
    ],
    kappa: 4,
    premagic: true,
    irreducible: true,
};

export function reportFor(composed: ComposeResponse, signature: string): AnalysisReport {
    const zeros = composed.matrix.map((row) => row.map(() => 0));
    return {
        signature,
        nodes: composed.nodes,
        kappa: composed.kappa,
        nodeFlowSums: Object.fromEntries(
            composed.nodes.map((node, i) => [node, composed.matrix[i].reduce((a, b) => a + b, 0)]),
        ),
        matrix: composed.matrix,
        probabilityMatrix: zeros,
        outflowStochastic: zeros,
        inflowStochastic: zeros,
        pivots: [],
        irreducible: composed.irreducible,
        premagic: composed.premagic,
        idealFlow: composed.premagic && composed.irreducible,
    };
}

export function balancedCheck(): CheckResponse {
    return {
        premagic: true,
        irreducible: true,
        idealFlow: true,
        rowSums: {},
        columnSums: {},
        unbalanced: [],
    };
}
