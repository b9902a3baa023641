import { describe, expect, it } from "vitest";

import {
    escapeHtml,
    renderEntryCard,
    renderLookupResults,
    renderQueue,
    renderQueueItem,
    renderStats,
} from "../src/views.js";
import type { Entry, Proposal } from "../src/types.js";

function verbEntry(senseIndex: number, secondary: string): Entry {
    return {
        lemma: "rap",
        language: "hi",
        pos: "verb",
        sense_index: senseIndex,
        gloss: `meaning ${senseIndex}`,
        primary_sense: "ME",
        secondary_sense: secondary,
        provenance: "manual",
        example: "",
        primary: { code: "ME", label: "Means|End", primitive: "Do" },
        secondary: null,
    };
}

function proposal(overrides: Partial<Proposal> = {}): Proposal {
    return {
        id: "01TEST",
        lemma: "naya",
        language: "hi",
        pos: "verb",
        sense_index: 1,
        proposed_primary: "BA",
        proposed_secondary: "ME",
        gloss: "",
        example: "supporting sentence",
        submitter: "alice",
        source: "crowd",
        created_at: "2026-01-01T00:00:00+00:00",
        status: "pending",
        reviewer: "",
        reviewed_at: null,
        evidence: null,
        comments: [],
        ...overrides,
    };
}

describe("entry cards", () => {
    it("renders one card per polysemous sense", () => {
        const entries = [verbEntry(1, "KK"), verbEntry(2, "BA"), verbEntry(3, "PW")];
        const html = renderLookupResults("rap", "hi", entries);
        expect(html.match(/entry-card/g)).toHaveLength(3);
        expect(html).toContain("ME — Means|End (Do)");
    });

    it("verb cards show primary and secondary rows", () => {
        const html = renderEntryCard(verbEntry(1, "KK"));
        expect(html).toContain("primary");
        expect(html).toContain("secondary");
        expect(html).toContain("KK — Know|Known (Know)");
    });

    it("adverb cards show a single class badge and no secondary field", () => {
        const entry: Entry = {
            lemma: "lagbhag",
            language: "hi",
            pos: "adverb",
            sense_index: 1,
            gloss: "approximately",
            primary_sense: "MSR",
            secondary_sense: "",
            provenance: "manual",
            example: "",
            primary: { code: "MSR", label: "Measure" },
            secondary: null,
        };
        const html = renderEntryCard(entry);
        expect(html).toContain("MSR — Measure");
        expect(html).not.toContain("secondary");
    });

    it("unknown lemma renders a propose call to action with the lemma prefilled", () => {
        const html = renderLookupResults("naukarnā", "hi", null);
        expect(html).toContain("Propose this word");
        expect(html).toContain('value="naukarnā"');
        expect(html).toContain("proposal-form");
    });

    it("escapes user-supplied text", () => {
        const entry = verbEntry(1, "KK");
        entry.gloss = '<script>alert("x")</script>';
        const html = renderEntryCard(entry);
        expect(html).not.toContain("<script>");
        expect(html).toContain("&lt;script&gt;");
    });
});

describe("review queue", () => {
    it("renders accept and reject actions for pending items", () => {
        const html = renderQueue([proposal()], "bob", null);
        expect(html).toContain('data-decision="accept"');
        expect(html).toContain('data-decision="reject"');
        expect(html).not.toContain("disabled");
    });

    it("disables actions on self-authored items", () => {
        const html = renderQueueItem(proposal(), "alice", false);
        expect(html).toContain("disabled");
        expect(html).toContain("your own proposal");
    });

    it("renders the similarity-cluster evidence with cosines", () => {
        const withEvidence = proposal({
            source: "propagation",
            evidence: {
                threshold: 0.7,
                cluster: [
                    { word: "nocanā", cosine: 0.98, sense: "PW" },
                    { word: "ghisanā", cosine: 0.95, sense: "PW" },
                ],
                vote_counts: { PW: 2 },
                tie_broken: false,
            },
        });
        const html = renderQueueItem(withEvidence, "bob", false);
        expect(html).toContain("Similarity cluster");
        expect(html).toContain("0.980");
        expect(html).toContain("PW — Part|Whole (Cut)");
    });

    it("shows the discussion thread when open", () => {
        const divided = proposal({
            comments: [
                { user: "carol", timestamp: "t1", text: "primary looks wrong" },
                { user: "bob", timestamp: "t2", text: "agreed, discuss" },
            ],
        });
        const closed = renderQueueItem(divided, "bob", false);
        expect(closed).toContain("Discuss (2)");
        expect(closed).not.toContain("primary looks wrong");
        const open = renderQueueItem(divided, "bob", true);
        expect(open).toContain("primary looks wrong");
        expect(open).toContain("agreed, discuss");
    });

    it("proposed senses always carry labels", () => {
        const html = renderQueueItem(proposal(), "bob", false);
        expect(html).toContain("BA — Before|After (Move)");
        expect(html).toContain("ME — Means|End (Do)");
    });
});

describe("stats view", () => {
    it("renders one labelled bar per sense", () => {
        const html = renderStats({
            language: "hi",
            pos: "adverb",
            which: "primary",
            percent: { TMP: 50.0, SPT: 0.0, FRC: 25.0, MSR: 25.0 },
            labels: { TMP: "Temporal", SPT: "Spatial", FRC: "Force", MSR: "Measure" },
        });
        expect(html.match(/stat-row/g)).toHaveLength(4);
        expect(html).toContain("TMP — Temporal");
        expect(html).toContain("50.0%");
    });
});

describe("escapeHtml", () => {
    it("neutralizes markup metacharacters", () => {
        expect(escapeHtml(`<a href="x">&'`)).toBe("&lt;a href=&quot;x&quot;&gt;&amp;&#39;");
    });
});
