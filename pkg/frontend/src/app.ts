// Single-page app bootstrap: holds the state, talks to the service through
// Client, and re-renders the pure views after every change. Optimistic
// review updates roll back when the service refuses (403/409).

import { Client, ServiceError } from "./api.js";
import { initialState, removeFromQueue, restoreToQueue, type AppState } from "./state.js";
import {
    renderBanner,
    renderLookupResults,
    renderProposalForm,
    renderQueue,
    renderStats,
} from "./views.js";
import type { ProposalDraft, StatsPayload } from "./types.js";

interface Settings {
    baseUrl: string;
    token: string;
    user: string;
}

const SETTINGS_KEY = "senselex-webui-settings";

function loadSettings(): Settings {
    try {
        const raw = localStorage.getItem(SETTINGS_KEY);
        if (raw) {
            return JSON.parse(raw);
        }
    } catch {
        // fall through to defaults
    }
    return { baseUrl: "http://127.0.0.1:8000", token: "", user: "" };
}

class App {
    state: AppState = initialState();
    settings: Settings = loadSettings();
    client: Client;
    stats: StatsPayload | null = null;

    constructor(private root: HTMLElement) {
        this.client = new Client({ baseUrl: this.settings.baseUrl, token: this.settings.token });
    }

    saveSettings(settings: Settings) {
        this.settings = settings;
        localStorage.setItem(SETTINGS_KEY, JSON.stringify(settings));
        this.client = new Client({ baseUrl: settings.baseUrl, token: settings.token });
    }

    showError(message: string) {
        this.state.banner = message;
        this.render();
    }

    async openLookup(lemma?: string) {
        this.state.view = "lookup";
        if (lemma !== undefined) {
            this.state.lookupLemma = lemma;
        }
        if (this.state.lookupLemma) {
            try {
                this.state.lookupResult = await this.client.lookup(
                    this.state.language,
                    this.state.lookupLemma,
                );
                this.state.banner = null;
            } catch (error) {
                this.state.lookupResult = undefined;
                this.state.banner = error instanceof Error ? error.message : String(error);
            }
        }
        this.render();
    }

    async openReview() {
        this.state.view = "review";
        try {
            this.state.queue = await this.client.proposals("pending");
            this.state.banner = null;
        } catch (error) {
            this.state.banner = error instanceof Error ? error.message : String(error);
        }
        this.render();
    }

    async openStats() {
        this.state.view = "stats";
        try {
            this.stats = await this.client.stats(this.state.language, "verb");
            this.state.banner = null;
        } catch (error) {
            this.stats = null;
            this.state.banner = error instanceof Error ? error.message : String(error);
        }
        this.render();
    }

    async submitProposal(form: HTMLFormElement) {
        const data = new FormData(form);
        const pos = String(data.get("pos") ?? "verb");
        const draft: ProposalDraft = {
            lemma: String(data.get("lemma") ?? "").trim(),
            language: String(data.get("language") ?? this.state.language),
            pos,
            sense_index: Number(data.get("sense_index") ?? 1),
            proposed_primary: String(data.get("proposed_primary") ?? ""),
            proposed_secondary: pos === "verb" ? String(data.get("proposed_secondary") ?? "") : "",
            gloss: String(data.get("gloss") ?? ""),
            example: String(data.get("example") ?? ""),
        };
        try {
            const proposal = await this.client.submitProposal(draft);
            this.state.banner = `Proposal ${proposal.id} submitted for review.`;
            await this.openReview();
        } catch (error) {
            // surface the service message verbatim; the service owns validity
            this.showError(error instanceof Error ? error.message : String(error));
        }
    }

    async review(id: string, decision: "accept" | "reject") {
        const { queue, removed, index } = removeFromQueue(this.state.queue, id);
        if (!removed) {
            return;
        }
        this.state.queue = queue;
        this.render();
        try {
            await this.client.review(id, decision);
            if (decision === "accept" && removed.lemma === this.state.lookupLemma) {
                await this.openLookup();
            }
        } catch (error) {
            this.state.queue = restoreToQueue(this.state.queue, removed, index);
            this.showError(error instanceof Error ? error.message : String(error));
        }
    }

    async comment(id: string, text: string) {
        try {
            const updated = await this.client.comment(id, text);
            this.state.queue = this.state.queue.map((p) => (p.id === id ? updated : p));
            this.state.openDiscussion = id;
            this.render();
        } catch (error) {
            this.showError(error instanceof Error ? error.message : String(error));
        }
    }

    render() {
        const nav = `
<nav class="tabs">
  <button data-action="nav" data-view="lookup" class="${this.state.view === "lookup" ? "active" : ""}">Lookup</button>
  <button data-action="nav" data-view="review" class="${this.state.view === "review" ? "active" : ""}">Review queue</button>
  <button data-action="nav" data-view="stats" class="${this.state.view === "stats" ? "active" : ""}">Stats</button>
</nav>`;
        let body = "";
        if (this.state.view === "lookup") {
            const results =
                this.state.lookupResult === undefined
                    ? `<p class="hint">Look up a verb, adverb, or adjective to see its sense annotations.</p>${renderProposalForm({ language: this.state.language })}`
                    : renderLookupResults(this.state.lookupLemma, this.state.language, this.state.lookupResult);
            body = `
<form class="lookup-form" data-action="lookup">
  <select name="language">
    ${["hi", "te", "en"].map((l) => `<option value="${l}"${l === this.state.language ? " selected" : ""}>${l}</option>`).join("")}
  </select>
  <input name="lemma" placeholder="lemma" value="${this.state.lookupLemma}">
  <button type="submit">Search</button>
</form>
${results}`;
        } else if (this.state.view === "review") {
            body = renderQueue(this.state.queue, this.settings.user || null, this.state.openDiscussion);
        } else {
            body = this.stats ? renderStats(this.stats) : `<p class="hint">No stats available.</p>`;
        }
        this.root.innerHTML = `${renderBanner(this.state.banner)}${nav}<main>${body}</main>`;
    }

    wire() {
        this.root.addEventListener("click", (event) => {
            const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
            if (!target) {
                return;
            }
            const action = target.dataset.action;
            if (action === "nav") {
                const view = target.dataset.view;
                if (view === "lookup") void this.openLookup();
                else if (view === "review") void this.openReview();
                else void this.openStats();
            } else if (action === "review") {
                void this.review(target.dataset.id!, target.dataset.decision as "accept" | "reject");
            } else if (action === "toggle-discussion") {
                const id = target.dataset.id!;
                this.state.openDiscussion = this.state.openDiscussion === id ? null : id;
                this.render();
            } else if (action === "open-propose") {
                const form = this.root.querySelector<HTMLElement>(".proposal-form");
                form?.scrollIntoView({ behavior: "smooth" });
            }
        });
        this.root.addEventListener("submit", (event) => {
            const form = event.target as HTMLFormElement;
            const action = form.dataset.action;
            if (!action) {
                return;
            }
            event.preventDefault();
            if (action === "lookup") {
                const data = new FormData(form);
                this.state.language = String(data.get("language") ?? "hi");
                void this.openLookup(String(data.get("lemma") ?? "").trim());
            } else if (action === "submit-proposal") {
                void this.submitProposal(form);
            } else if (action === "submit-comment") {
                const text = String(new FormData(form).get("text") ?? "").trim();
                void this.comment(form.dataset.proposal!, text);
            }
        });
        this.root.addEventListener("change", (event) => {
            const select = event.target as HTMLSelectElement;
            if (select.dataset.action === "pos-changed") {
                const form = select.closest("form");
                if (form) {
                    // swap the sense dropdowns for the newly chosen pos
                    const lemma = String(new FormData(form).get("lemma") ?? "");
                    const language = String(new FormData(form).get("language") ?? this.state.language);
                    form.outerHTML = renderProposalForm({ lemma, language, pos: select.value });
                }
            }
        });

        const settingsForm = document.querySelector<HTMLFormElement>("#settings");
        settingsForm?.addEventListener("submit", (event) => {
            event.preventDefault();
            const data = new FormData(settingsForm);
            this.saveSettings({
                baseUrl: String(data.get("baseUrl") ?? "http://127.0.0.1:8000"),
                token: String(data.get("token") ?? ""),
                user: String(data.get("user") ?? ""),
            });
            this.state.banner = "Settings saved.";
            this.render();
        });
        if (settingsForm) {
            (settingsForm.elements.namedItem("baseUrl") as HTMLInputElement).value = this.settings.baseUrl;
            (settingsForm.elements.namedItem("token") as HTMLInputElement).value = this.settings.token;
            (settingsForm.elements.namedItem("user") as HTMLInputElement).value = this.settings.user;
        }
    }
}

export function start(): void {
    const root = document.querySelector<HTMLElement>("#app");
    if (!root) {
        throw new Error("missing #app container");
    }
    const app = new App(root);
    app.wire();
    app.render();
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
    start();
} else if (typeof document !== "undefined") {
    document.addEventListener("DOMContentLoaded", start);
}
