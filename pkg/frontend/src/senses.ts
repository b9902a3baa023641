// Display metadata for the closed sense inventories. The service is the
// validity authority; this table only feeds labels and form options.

import type { SenseDetail } from "./types.js";

export const VERB_SENSES: SenseDetail[] = [
    { code: "ME", label: "Means|End", primitive: "Do" },
    { code: "BA", label: "Before|After", primitive: "Move" },
    { code: "KK", label: "Know|Known", primitive: "Know" },
    { code: "LL", label: "Locus|Located", primitive: "Is" },
    { code: "PW", label: "Part|Whole", primitive: "Cut" },
    { code: "WW", label: "Wrap|Wrapped", primitive: "Cover" },
    { code: "GG", label: "Grip|Grasp", primitive: "Have" },
];

export const ADVERB_CLASSES: SenseDetail[] = [
    { code: "TMP", label: "Temporal" },
    { code: "SPT", label: "Spatial" },
    { code: "FRC", label: "Force" },
    { code: "MSR", label: "Measure" },
];

export const ADJECTIVE_TYPES: SenseDetail[] = [
    { code: "LOC", label: "Locational" },
    { code: "QNT", label: "Quantity" },
    { code: "REL", label: "Relational" },
    { code: "STR", label: "Stress" },
    { code: "JUD", label: "Judgement" },
    { code: "PRP", label: "Property" },
];

const BY_POS: Record<string, SenseDetail[]> = {
    verb: VERB_SENSES,
    adverb: ADVERB_CLASSES,
    adjective: ADJECTIVE_TYPES,
};

export function sensesFor(pos: string): SenseDetail[] {
    return BY_POS[pos] ?? [];
}

export function lookupDetail(pos: string, code: string): SenseDetail | null {
    return sensesFor(pos).find((s) => s.code === code) ?? null;
}

/**
 * Human form of a sense code: always code, label and, for verbs, the
 * primitive gloss. A bare code must never reach the page.
 */
export function senseChip(pos: string, code: string, detail?: SenseDetail | null): string {
    const meta = detail ?? lookupDetail(pos, code);
    if (!meta) {
        return `${code} — (unknown sense)`;
    }
    return meta.primitive ? `${meta.code} — ${meta.label} (${meta.primitive})` : `${meta.code} — ${meta.label}`;
}
