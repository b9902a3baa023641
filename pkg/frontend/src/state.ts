// View state and the optimistic-update helpers for the review queue.

import type { Entry, Proposal } from "./types.js";

export interface AppState {
    view: "lookup" | "review" | "stats";
    language: string;
    lookupLemma: string;
    lookupResult: Entry[] | null | undefined; // undefined = not searched yet
    queue: Proposal[];
    openDiscussion: string | null; // proposal id
    banner: string | null;
}

export function initialState(): AppState {
    return {
        view: "lookup",
        language: "hi",
        lookupLemma: "",
        lookupResult: undefined,
        queue: [],
        openDiscussion: null,
        banner: null,
    };
}

export interface QueueRemoval {
    queue: Proposal[];
    removed: Proposal | null;
    index: number;
}

/** Take a proposal out of the queue, remembering where it sat. */
export function removeFromQueue(queue: Proposal[], id: string): QueueRemoval {
    const index = queue.findIndex((p) => p.id === id);
    if (index < 0) {
        return { queue, removed: null, index };
    }
    const next = queue.slice(0, index).concat(queue.slice(index + 1));
    return { queue: next, removed: queue[index], index };
}

/** Undo an optimistic removal, restoring the original position. */
export function restoreToQueue(queue: Proposal[], removed: Proposal, index: number): Proposal[] {
    const at = Math.min(Math.max(index, 0), queue.length);
    return queue.slice(0, at).concat([removed], queue.slice(at));
}
