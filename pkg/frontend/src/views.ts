// Pure render functions: data in, HTML string out. All user-originated
// text goes through escapeHtml; actions are wired via data-action
// attributes picked up by app.ts.

import { senseChip, sensesFor } from "./senses.js";
import type { Entry, Proposal, StatsPayload } from "./types.js";

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;")
        .replace(/'/g, "&#39;");
}

function senseBadge(pos: string, code: string, detail?: Entry["primary"]): string {
    return `<span class="sense-badge">${escapeHtml(senseChip(pos, code, detail ?? undefined))}</span>`;
}

export function renderEntryCard(entry: Entry): string {
    const display = entry.sense_index > 1 || entry.pos === "verb"
        ? `${entry.lemma}<sub>${entry.sense_index}</sub>`
        : entry.lemma;
    const secondary = entry.pos === "verb" && entry.secondary_sense
        ? `<div class="sense-row"><span class="sense-role">secondary</span>${senseBadge(entry.pos, entry.secondary_sense, entry.secondary)}</div>`
        : "";
    const gloss = entry.gloss ? `<p class="gloss">${escapeHtml(entry.gloss)}</p>` : "";
    const example = entry.example
        ? `<blockquote class="example">${escapeHtml(entry.example)}</blockquote>`
        : "";
    return `
<article class="entry-card" data-lemma="${escapeHtml(entry.lemma)}" data-pos="${escapeHtml(entry.pos)}">
  <header>
    <h3 class="lemma">${display}</h3>
    <span class="pos-tag">${escapeHtml(entry.pos)}</span>
    <span class="provenance provenance-${escapeHtml(entry.provenance)}">${escapeHtml(entry.provenance)}</span>
  </header>
  <div class="sense-row"><span class="sense-role">${entry.pos === "verb" ? "primary" : "class"}</span>${senseBadge(entry.pos, entry.primary_sense, entry.primary)}</div>
  ${secondary}
  ${gloss}
  ${example}
</article>`;
}

export function renderLookupResults(lemma: string, language: string, entries: Entry[] | null): string {
    if (entries === null) {
        return `
<div class="empty-result">
  <p>No entry for <strong>${escapeHtml(lemma)}</strong> yet.</p>
  <button data-action="open-propose" data-lemma="${escapeHtml(lemma)}">Propose this word</button>
</div>
${renderProposalForm({ lemma, language })}`;
    }
    return `<div class="card-list">${entries.map(renderEntryCard).join("\n")}</div>`;
}

export interface ProposalPrefill {
    lemma?: string;
    language?: string;
    pos?: string;
}

function senseOptions(pos: string, selected?: string, allowEmpty = false): string {
    const blank = allowEmpty ? `<option value="">(none)</option>` : "";
    return (
        blank +
        sensesFor(pos)
            .map(
                (s) =>
                    `<option value="${s.code}"${s.code === selected ? " selected" : ""}>${escapeHtml(
                        senseChip(pos, s.code),
                    )}</option>`,
            )
            .join("")
    );
}

export function renderProposalForm(prefill: ProposalPrefill = {}): string {
    const pos = prefill.pos ?? "verb";
    return `
<form class="proposal-form" data-action="submit-proposal">
  <h3>Propose a sense annotation</h3>
  <label>Lemma <input name="lemma" required value="${escapeHtml(prefill.lemma ?? "")}"></label>
  <label>Language
    <select name="language">
      ${["hi", "te", "en"].map((l) => `<option value="${l}"${l === (prefill.language ?? "hi") ? " selected" : ""}>${l}</option>`).join("")}
    </select>
  </label>
  <label>Part of speech
    <select name="pos" data-action="pos-changed">
      ${["verb", "adverb", "adjective"].map((p) => `<option value="${p}"${p === pos ? " selected" : ""}>${p}</option>`).join("")}
    </select>
  </label>
  <label>Sense index <input name="sense_index" type="number" min="1" value="1"></label>
  <label>Primary sense <select name="proposed_primary">${senseOptions(pos)}</select></label>
  <label class="secondary-field${pos === "verb" ? "" : " hidden"}">Secondary sense
    <select name="proposed_secondary" ${pos === "verb" ? "" : "disabled"}>${senseOptions(pos, undefined, true)}</select>
  </label>
  <label>Gloss <input name="gloss"></label>
  <label>Supporting example (required)
    <textarea name="example" required placeholder="A sentence showing the claimed sense"></textarea>
  </label>
  <button type="submit">Submit for review</button>
</form>`;
}

function renderEvidence(proposal: Proposal): string {
    if (!proposal.evidence) {
        return "";
    }
    const rows = proposal.evidence.cluster
        .map(
            (m) =>
                `<tr><td>${escapeHtml(m.word)}</td><td>${m.cosine.toFixed(3)}</td><td>${escapeHtml(
                    senseChip(proposal.pos, m.sense),
                )}</td></tr>`,
        )
        .join("");
    const votes = Object.entries(proposal.evidence.vote_counts)
        .sort((a, b) => b[1] - a[1])
        .map(([code, count]) => `${escapeHtml(senseChip(proposal.pos, code))}: ${count}`)
        .join(", ");
    return `
<details class="evidence" open>
  <summary>Similarity cluster (cosine ≥ ${proposal.evidence.threshold})</summary>
  <table class="evidence-table">
    <thead><tr><th>neighbor</th><th>cosine</th><th>sense</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>
  <p class="votes">Votes: ${votes}${proposal.evidence.tie_broken ? " (tie broken)" : ""}</p>
</details>`;
}

export function renderComments(proposal: Proposal): string {
    const items = proposal.comments
        .map(
            (c) =>
                `<li class="comment"><span class="comment-user">${escapeHtml(c.user)}</span>
  <time>${escapeHtml(c.timestamp)}</time>
  <p>${escapeHtml(c.text)}</p></li>`,
        )
        .join("\n");
    return `
<section class="discussion" data-proposal="${escapeHtml(proposal.id)}">
  <h4>Discussion</h4>
  <ol class="comments">${items || "<li class='comment none'>No comments yet.</li>"}</ol>
  <form data-action="submit-comment" data-proposal="${escapeHtml(proposal.id)}">
    <textarea name="text" required placeholder="Add to the discussion"></textarea>
    <button type="submit">Comment</button>
  </form>
</section>`;
}

export function renderQueueItem(proposal: Proposal, currentUser: string | null, discussionOpen: boolean): string {
    const own = currentUser !== null && proposal.submitter === currentUser;
    const disabled = own ? ` disabled title="You cannot review your own proposal"` : "";
    const secondary = proposal.pos === "verb" && proposal.proposed_secondary
        ? ` &middot; secondary ${escapeHtml(senseChip(proposal.pos, proposal.proposed_secondary))}`
        : "";
    const actions =
        proposal.status === "pending"
            ? `<button data-action="review" data-decision="accept" data-id="${escapeHtml(proposal.id)}"${disabled}>Accept</button>
<button data-action="review" data-decision="reject" data-id="${escapeHtml(proposal.id)}"${disabled}>Reject</button>`
            : `<span class="status status-${proposal.status}">${proposal.status}${proposal.reviewer ? ` by ${escapeHtml(proposal.reviewer)}` : ""}</span>`;
    return `
<article class="proposal-item source-${proposal.source}" data-id="${escapeHtml(proposal.id)}">
  <header>
    <h3>${escapeHtml(proposal.lemma)}<sub>${proposal.sense_index}</sub></h3>
    <span class="pos-tag">${escapeHtml(proposal.pos)}</span>
    <span class="source-tag">${proposal.source === "propagation" ? "embedding proposal" : "crowd proposal"}</span>
    <span class="submitter">by ${escapeHtml(proposal.submitter)}</span>
  </header>
  <p class="proposed">proposes ${escapeHtml(senseChip(proposal.pos, proposal.proposed_primary))}${secondary}</p>
  ${proposal.gloss ? `<p class="gloss">${escapeHtml(proposal.gloss)}</p>` : ""}
  <blockquote class="example">${escapeHtml(proposal.example)}</blockquote>
  ${renderEvidence(proposal)}
  <footer>
    ${actions}
    <button data-action="toggle-discussion" data-id="${escapeHtml(proposal.id)}">
      Discuss (${proposal.comments.length})
    </button>
  </footer>
  ${discussionOpen ? renderComments(proposal) : ""}
</article>`;
}

export function renderQueue(proposals: Proposal[], currentUser: string | null, openDiscussion: string | null): string {
    if (!proposals.length) {
        return `<p class="empty-result">The review queue is empty.</p>`;
    }
    return `<div class="queue">${proposals
        .map((p) => renderQueueItem(p, currentUser, p.id === openDiscussion))
        .join("\n")}</div>`;
}

export function renderStats(payload: StatsPayload): string {
    const rows = Object.entries(payload.percent)
        .map(([code, value]) => {
            const chip = senseChip(payload.pos, code, {
                code,
                label: payload.labels[code] ?? code,
            });
            return `<div class="stat-row">
  <span class="stat-label">${escapeHtml(chip)}</span>
  <div class="stat-bar"><div class="stat-fill" style="width:${Math.max(value, 0.5)}%"></div></div>
  <span class="stat-value">${value.toFixed(1)}%</span>
</div>`;
        })
        .join("\n");
    return `<section class="stats"><h3>${escapeHtml(payload.pos)} &middot; ${escapeHtml(
        payload.which,
    )} sense distribution (${escapeHtml(payload.language)})</h3>${rows}</section>`;
}

export function renderBanner(message: string | null): string {
    return message ? `<div class="banner" role="alert">${escapeHtml(message)}</div>` : "";
}
