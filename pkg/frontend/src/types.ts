// Shapes of the service JSON payloads.

export interface SenseDetail {
    code: string;
    label: string;
    primitive?: string;
}

export interface Entry {
    lemma: string;
    language: string;
    pos: string;
    sense_index: number;
    gloss: string;
    primary_sense: string;
    secondary_sense: string;
    provenance: string;
    example: string;
    primary: SenseDetail | null;
    secondary: SenseDetail | null;
}

export interface CommentItem {
    user: string;
    timestamp: string;
    text: string;
}

export interface EvidenceMember {
    word: string;
    cosine: number;
    sense: string;
}

export interface Evidence {
    threshold: number;
    cluster: EvidenceMember[];
    vote_counts: Record<string, number>;
    tie_broken: boolean;
}

export interface Proposal {
    id: string;
    lemma: string;
    language: string;
    pos: string;
    sense_index: number;
    proposed_primary: string;
    proposed_secondary: string;
    gloss: string;
    example: string;
    submitter: string;
    source: "crowd" | "propagation";
    created_at: string;
    status: "pending" | "accepted" | "rejected";
    reviewer: string;
    reviewed_at: string | null;
    evidence: Evidence | null;
    comments: CommentItem[];
}

export interface ProposalDraft {
    lemma: string;
    language: string;
    pos: string;
    sense_index: number;
    proposed_primary: string;
    proposed_secondary: string;
    gloss: string;
    example: string;
    source?: "crowd" | "propagation";
    evidence?: Evidence;
}

export interface StatsPayload {
    language: string;
    pos: string;
    which: string;
    percent: Record<string, number>;
    labels: Record<string, string>;
}
