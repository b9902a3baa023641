// Thin typed client over the service HTTP/JSON API. Errors from the
// service are surfaced verbatim; the UI adds no validity logic of its own.

import type { Entry, Proposal, ProposalDraft, StatsPayload } from "./types.js";

export interface ClientConfig {
    baseUrl: string;
    token?: string;
}

export class ServiceError extends Error {
    status: number;
    code: string;

    constructor(status: number, code: string, message: string) {
        super(message);
        this.status = status;
        this.code = code;
    }
}

async function raise(response: Response): Promise<never> {
    let code = "error";
    let message = `${response.status} ${response.statusText}`;
    try {
        const body = await response.json();
        if (body && typeof body === "object") {
            code = body.error ?? code;
            message = body.message ?? message;
        }
    } catch {
        // non-JSON error body; keep the status line
    }
    throw new ServiceError(response.status, code, message);
}

export class Client {
    constructor(private config: ClientConfig) {}

    private headers(withAuth: boolean): Record<string, string> {
        const headers: Record<string, string> = { "Content-Type": "application/json" };
        if (withAuth && this.config.token) {
            headers["Authorization"] = `Bearer ${this.config.token}`;
        }
        return headers;
    }

    private url(path: string, params?: Record<string, string | undefined>): string {
        const base = this.config.baseUrl.replace(/\/$/, "");
        const query = params
            ? Object.entries(params)
                  .filter(([, v]) => v !== undefined && v !== "")
                  .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(v as string)}`)
                  .join("&")
            : "";
        return query ? `${base}${path}?${query}` : `${base}${path}`;
    }

    /** Entry lookup; resolves to null when the lemma is absent (404). */
    async lookup(language: string, lemma: string, pos?: string): Promise<Entry[] | null> {
        const path = `/entries/${encodeURIComponent(language)}/${encodeURIComponent(lemma)}`;
        const response = await fetch(this.url(path, { pos }));
        if (response.status === 404) {
            return null;
        }
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async stats(language: string, pos: string, which = "primary"): Promise<StatsPayload> {
        const response = await fetch(this.url("/stats", { lang: language, pos, which }));
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async submitProposal(draft: ProposalDraft): Promise<Proposal> {
        const response = await fetch(this.url("/proposals"), {
            method: "POST",
            headers: this.headers(true),
            body: JSON.stringify(draft),
        });
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async proposals(status?: string): Promise<Proposal[]> {
        const response = await fetch(this.url("/proposals", { status }));
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async proposal(id: string): Promise<Proposal> {
        const response = await fetch(this.url(`/proposals/${encodeURIComponent(id)}`));
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async review(id: string, decision: "accept" | "reject"): Promise<Proposal> {
        const response = await fetch(this.url(`/proposals/${encodeURIComponent(id)}/review`), {
            method: "POST",
            headers: this.headers(true),
            body: JSON.stringify({ decision }),
        });
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }

    async comment(id: string, text: string): Promise<Proposal> {
        const response = await fetch(this.url(`/proposals/${encodeURIComponent(id)}/comments`), {
            method: "POST",
            headers: this.headers(true),
            body: JSON.stringify({ text }),
        });
        if (!response.ok) {
            await raise(response);
        }
        return response.json();
    }
}
