import { describe, expect, it } from "vitest";

import { ADJECTIVE_TYPES, ADVERB_CLASSES, VERB_SENSES, senseChip, sensesFor } from "../src/senses.js";

describe("sense inventories", () => {
    it("has seven verb sense-types with primitives", () => {
        expect(VERB_SENSES.map((s) => s.code)).toEqual(["ME", "BA", "KK", "LL", "PW", "WW", "GG"]);
        expect(VERB_SENSES.every((s) => s.primitive)).toBe(true);
    });

    it("has four adverb classes and six adjective types", () => {
        expect(ADVERB_CLASSES.map((s) => s.label)).toEqual(["Temporal", "Spatial", "Force", "Measure"]);
        expect(ADJECTIVE_TYPES).toHaveLength(6);
    });
});

describe("senseChip", () => {
    it("never shows a verb code without label and primitive", () => {
        for (const sense of VERB_SENSES) {
            const chip = senseChip("verb", sense.code);
            expect(chip).toContain(sense.code);
            expect(chip).toContain(sense.label);
            expect(chip).toContain(`(${sense.primitive})`);
        }
        expect(senseChip("verb", "ME")).toBe("ME — Means|End (Do)");
    });

    it("shows label for adverb and adjective codes", () => {
        expect(senseChip("adverb", "TMP")).toBe("TMP — Temporal");
        expect(senseChip("adjective", "JUD")).toBe("JUD — Judgement");
    });

    it("prefers service-provided detail when given", () => {
        expect(senseChip("verb", "ME", { code: "ME", label: "Means|End", primitive: "Do" })).toBe(
            "ME — Means|End (Do)",
        );
    });

    it("marks unknown codes instead of echoing them bare", () => {
        expect(senseChip("verb", "ZZ")).toContain("(unknown sense)");
    });

    it("exposes per-pos inventories for form options", () => {
        expect(sensesFor("verb")).toHaveLength(7);
        expect(sensesFor("adverb")).toHaveLength(4);
        expect(sensesFor("adjective")).toHaveLength(6);
        expect(sensesFor("noun")).toHaveLength(0);
    });
});
