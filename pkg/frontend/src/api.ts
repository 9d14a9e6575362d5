// Typed client for the ifnkit HTTP service.  Every number the playground
// displays comes from these endpoints; the page computes no flow math.

export interface MatrixDocument {
    nodes: string[];
    matrix: number[][];
}

export interface ComposeResponse extends MatrixDocument {
    kappa: number;
    premagic: boolean;
    irreducible: boolean;
}

export interface CheckResponse {
    premagic: boolean;
    irreducible: boolean;
    idealFlow: boolean;
    rowSums: Record<string, number>;
    columnSums: Record<string, number>;
    unbalanced: string[];
}

// exact rationals arrive as plain integers or "p/q" strings
export type RationalCell = number | string;

export interface PivotEntry {
    terms: [number, number];
    cycles: string[];
    pivots: string[];
}

export interface AnalysisReport {
    signature: string;
    nodes: string[];
    kappa: number;
    nodeFlowSums: Record<string, number>;
    matrix: number[][];
    probabilityMatrix: RationalCell[][];
    outflowStochastic: RationalCell[][];
    inflowStochastic: RationalCell[][];
    pivots: PivotEntry[];
    irreducible: boolean;
    premagic: boolean;
    idealFlow: boolean;
}

export interface WitnessEntry {
    cycle: string;
    weight: RationalCell;
}

export interface DecomposeResponse {
    signature?: string;
    witness?: WitnessEntry[];
    residual?: { from: string; to: string; value: RationalCell }[];
}

export class ApiError extends Error {
    constructor(
        readonly status: number,
        readonly code: string,
        readonly detail: string,
        readonly position?: number,
    ) {
        super(detail);
        this.name = "ApiError";
    }
}

interface ErrorPayload {
    error?: string;
    detail?: string;
    position?: number;
}

export class ApiClient {
    constructor(private readonly baseUrl: string = "") {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await fetch(this.baseUrl + path, init);
        const payload = await response.json().catch(() => null);
        if (!response.ok) {
            const err = (payload ?? {}) as ErrorPayload;
            throw new ApiError(
                response.status,
                err.error ?? `HTTP ${response.status}`,
                err.detail ?? response.statusText,
                err.position,
            );
        }
        return payload as T;
    }

    private post<T>(path: string, body: unknown): Promise<T> {
        return this.request<T>(path, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
    }

    compose(signature: string): Promise<ComposeResponse> {
        return this.post("/api/compose", { signature });
    }

    analyze(signature: string): Promise<AnalysisReport> {
        return this.post("/api/analyze", { signature });
    }

    check(doc: MatrixDocument): Promise<CheckResponse> {
        return this.post("/api/check", doc);
    }

    decompose(doc: MatrixDocument, method: "greedy" | "linear" = "greedy"): Promise<DecomposeResponse> {
        return this.post("/api/decompose", { ...doc, method });
    }

    random(nodes: number, kappa: number, seed: number): Promise<{ signature: string }> {
        return this.request(`/api/random?nodes=${nodes}&kappa=${kappa}&seed=${seed}`);
    }
}

// The subset the playground actually calls; tests substitute fakes.
export type PlaygroundApi = Pick<ApiClient, "compose" | "analyze" | "check" | "decompose" | "random">;
