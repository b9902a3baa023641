"""Regenerate the deterministic test fixtures under tests/fixtures/.

Run from the repo root: python scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import math
import random
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

HEADER = "lemma\tlanguage\tpos\tsense_index\tgloss\tprimary_sense\tsecondary_sense\tprovenance\texample"

DIM = 10


def write_tsv(name: str, rows: list[tuple]) -> None:
    lines = [HEADER]
    for row in rows:
        lines.append("\t".join(str(c) for c in row))
    (FIXTURES / name).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def axis(i: int, scale: float = 1.0) -> list[float]:
    vec = [0.0] * DIM
    vec[i] = scale
    return vec


def on_axis(target_axis: int, cosine: float, perp_axis: int, scale: float = 1.0) -> list[float]:
    vec = [0.0] * DIM
    vec[target_axis] = round(cosine * scale, 6)
    vec[perp_axis] = round(math.sqrt(1.0 - cosine * cosine) * scale, 6)
    return vec


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)

    # -- general-purpose lexicon (service, stats, corpus analytics) --------
    core_rows = [
        ("khelanā", "hi", "verb", 1, "play", "ME", "BA", "manual", "bacce maidāna mem khelanā pasanda karate haim"),
        ("karanā", "hi", "verb", 1, "do", "ME", "KK", "manual", ""),
        ("bahanā", "hi", "verb", 1, "flow", "BA", "ME", "manual", ""),
        ("calanā", "hi", "verb", 1, "walk", "BA", "ME", "manual", ""),
        ("rahanā", "hi", "verb", 1, "stay", "LL", "BA", "manual", ""),
        ("honā", "hi", "verb", 1, "happen", "LL", "BA", "manual", ""),
        ("kātanā", "hi", "verb", 1, "cut", "PW", "ME", "manual", ""),
        ("mitānā", "hi", "verb", 1, "erase", "PW", "ME", "manual", ""),
        ("jhāmpanā", "hi", "verb", 1, "cover", "WW", "ME", "manual", ""),
        ("pahanānā", "hi", "verb", 1, "dress-up someone", "WW", "GG", "manual", ""),
        ("pānā", "hi", "verb", 1, "get", "GG", "ME", "manual", ""),
        ("lenā", "hi", "verb", 1, "take", "GG", "ME", "manual", ""),
        ("parakhanā", "hi", "verb", 1, "examine", "KK", "ME", "manual", ""),
        ("jānanā", "hi", "verb", 1, "know", "KK", "ME", "manual", ""),
        ("rap", "hi", "verb", 1, "criticizing someone", "ME", "KK", "manual", ""),
        ("rap", "hi", "verb", 2, "to perform rap music", "ME", "BA", "manual", ""),
        ("rap", "hi", "verb", 3, "to hit or say something suddenly and forcefully", "ME", "PW", "manual", ""),
        ("sasamaya", "hi", "adverb", 1, "timely", "TMP", "", "manual", ""),
        ("sadā", "hi", "adverb", 1, "always", "TMP", "", "manual", ""),
        ("pās", "hi", "adverb", 1, "near", "SPT", "", "manual", ""),
        ("nikat", "hi", "adverb", 1, "close by", "SPT", "", "manual", ""),
        ("barbas", "hi", "adverb", 1, "unwillingly", "FRC", "", "manual", ""),
        ("zor", "hi", "adverb", 1, "forcefully", "FRC", "", "manual", ""),
        ("lagbhag", "hi", "adverb", 1, "approximately", "MSR", "", "manual", ""),
        ("kam", "hi", "adverb", 1, "less", "MSR", "", "manual", ""),
        ("acchā", "hi", "adjective", 1, "good", "JUD", "", "manual", ""),
        ("kālā", "hi", "adjective", 1, "black", "PRP", "", "manual", ""),
        ("mazbūt", "hi", "adjective", 1, "strong", "STR", "", "manual", ""),
        ("dūsarā", "hi", "adjective", 1, "other", "LOC", "", "manual", ""),
        ("eka", "hi", "adjective", 1, "one", "QNT", "", "manual", ""),
        ("mātrihīn", "hi", "adjective", 1, "without mother", "REL", "", "manual", ""),
    ]
    write_tsv("hi_core.tsv", core_rows)

    # -- labeled pool for propagation (targets intentionally absent) -------
    labeled_rows = [
        ("nocanā", "hi", "verb", 1, "scratch", "PW", "ME", "manual", ""),
        ("ghisanā", "hi", "verb", 1, "rub away", "PW", "BA", "manual", ""),
        ("chedanā", "hi", "verb", 1, "pierce", "PW", "ME", "manual", ""),
        ("khuracanā", "hi", "verb", 1, "scrape", "PW", "ME", "manual", ""),
        ("pīsanā", "hi", "verb", 1, "grind", "PW", "ME", "manual", ""),
        ("phulānā", "hi", "verb", 1, "inflate", "WW", "BA", "manual", ""),
        ("batānā", "hi", "verb", 1, "tell", "KK", "ME", "manual", ""),
        ("kahanā", "hi", "verb", 1, "say", "KK", "ME", "manual", ""),
        ("lenā-denā", "hi", "verb", 1, "give and take", "GG", "ME", "manual", ""),
        ("mālūma", "hi", "verb", 1, "be known", "KK", "LL", "manual", ""),
        ("mānanā", "hi", "verb", 1, "accept", "KK", "GG", "manual", ""),
        ("pūchanā", "hi", "verb", 1, "ask", "KK", "ME", "manual", ""),
        ("khelanā", "hi", "verb", 1, "play", "ME", "BA", "manual", ""),
        ("karanā", "hi", "verb", 1, "do", "ME", "KK", "manual", ""),
        ("rahanā", "hi", "verb", 1, "stay", "LL", "BA", "manual", ""),
        ("honā", "hi", "verb", 1, "happen", "LL", "BA", "manual", ""),
        ("kātanā", "hi", "verb", 1, "cut", "PW", "ME", "manual", ""),
        ("lenā", "hi", "verb", 1, "take", "GG", "ME", "manual", ""),
        ("dogunā", "hi", "adverb", 1, "twofold", "MSR", "", "manual", ""),
        ("dugunā", "hi", "adverb", 1, "double", "MSR", "", "manual", ""),
        ("caugunā", "hi", "adverb", 1, "fourfold", "MSR", "", "manual", ""),
        ("sahasā", "hi", "adverb", 1, "suddenly", "TMP", "", "manual", ""),
        ("ekāeka", "hi", "adverb", 1, "all at once", "TMP", "", "manual", ""),
        ("acānaka", "hi", "adverb", 1, "abruptly", "TMP", "", "manual", ""),
        ("sasamaya", "hi", "adverb", 1, "timely", "TMP", "", "manual", ""),
        ("pās", "hi", "adverb", 1, "near", "SPT", "", "manual", ""),
        ("barbas", "hi", "adverb", 1, "unwillingly", "FRC", "", "manual", ""),
        ("lagbhag", "hi", "adverb", 1, "approximately", "MSR", "", "manual", ""),
    ]
    write_tsv("hi_labeled.tsv", labeled_rows)

    # -- gold senses for the propagation targets ---------------------------
    gold_rows = [
        ("cīranā", "hi", "verb", 1, "tear", "PW", "ME", "manual", ""),
        ("jānanā", "hi", "verb", 1, "know", "KK", "ME", "manual", ""),
        ("tigunā", "hi", "adverb", 1, "threefold", "MSR", "", "manual", ""),
        ("yakāyaka", "hi", "adverb", 1, "suddenly", "TMP", "", "manual", ""),
    ]
    write_tsv("hi_gold.tsv", gold_rows)

    # -- embedding space realizing the reference similarity clusters -------
    # axes: 0 tear-cluster, 1 know-cluster, 2 fold-cluster, 3 sudden-cluster,
    # 4..7 distractors, 8/9 shared perpendicular components
    vectors: dict[str, list[float]] = {}
    vectors["cīranā"] = axis(0)
    for word, cos in [
        ("nocanā", 0.98),
        ("ghisanā", 0.95),
        ("chedanā", 0.92),
        ("khuracanā", 0.88),
        ("pīsanā", 0.82),
        ("phulānā", 0.75),
    ]:
        vectors[word] = on_axis(0, cos, 9)
    vectors["jānanā"] = axis(1)
    for word, cos in [
        ("batānā", 0.97),
        ("kahanā", 0.93),
        ("lenā-denā", 0.89),
        ("mālūma", 0.85),
        ("mānanā", 0.80),
        ("pūchanā", 0.76),
    ]:
        vectors[word] = on_axis(1, cos, 9)
    vectors["tigunā"] = axis(2)
    for word, cos in [("dogunā", 0.96), ("dugunā", 0.90), ("caugunā", 0.81)]:
        vectors[word] = on_axis(2, cos, 8)
    vectors["yakāyaka"] = axis(3)
    for word, cos in [("sahasā", 0.95), ("ekāeka", 0.87), ("acānaka", 0.78)]:
        vectors[word] = on_axis(3, cos, 8)
    vectors["khelanā"] = axis(4)
    vectors["karanā"] = on_axis(4, 0.5, 5)
    vectors["rahanā"] = axis(5)
    vectors["honā"] = axis(6, scale=2.0)  # deliberately unnormalized
    vectors["kātanā"] = axis(7)
    vectors["lenā"] = on_axis(6, 0.707107, 7)
    vectors["sasamaya"] = axis(4)
    vectors["pās"] = axis(5)
    vectors["barbas"] = axis(6)
    vectors["lagbhag"] = axis(7, scale=0.5)
    lines = [f"{len(vectors)} {DIM}"]
    for word, vec in vectors.items():
        lines.append(word + " " + " ".join(f"{c:.6f}" for c in vec))
    (FIXTURES / "hi_vectors.vec").write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")

    # -- 100-sentence parsed corpus with planned verb frequencies ----------
    rng = random.Random(20240801)
    verb_plan = [
        ("khelanā", 60),   # > 50: profiled
        ("karanā", 51),    # > 50: profiled (boundary + 1)
        ("bahanā", 50),    # exactly 50: must be excluded by "> min_freq"
        ("bhāganā", 55),  # frequent but absent from the lexicon
        ("calanā", 12),
        ("rahanā", 8),
        ("honā", 7),
        ("kātanā", 6),
        ("pānā", 5),
        ("lenā", 4),
        ("jānanā", 3),
    ]
    verb_tokens: list[str] = []
    for lemma, count in verb_plan:
        verb_tokens.extend([lemma] * count)
    rng.shuffle(verb_tokens)
    known_adverbs = ["sasamaya", "sadā", "pās", "nikat", "barbas", "zor", "lagbhag", "kam"]
    unknown_adverbs = ["turanta", "phir"]
    nouns = ["rāma", "sītā", "ghara", "vana", "nadī", "pustaka", "gāmva", "phala"]
    karaka_deprels = ["k1", "k1s", "k2", "K2P", "k3", "k4", "k5", "k6", "k7", "k7t", "k8"]
    other_deprels = ["nmod", "pof", "adv", "cc"]

    sentence_sizes: list[int] = []
    remaining = len(verb_tokens)
    for left in range(100, 0, -1):
        low = max(1, remaining - 3 * (left - 1))
        high = min(3, remaining - (left - 1))
        size = rng.randint(low, high)
        sentence_sizes.append(size)
        remaining -= size
    assert remaining == 0

    out_lines: list[str] = []
    cursor = 0
    underscore_budget = 5
    for sent_no, size in enumerate(sentence_sizes, start=1):
        verbs = verb_tokens[cursor : cursor + size]
        cursor += size
        rows: list[tuple[str, str, str, int | None, str]] = []  # form, lemma, upos, head_slot, deprel
        verb_slots: list[int] = []
        for v_index, verb in enumerate(verbs):
            children: list[tuple[str, str, str, str]] = []
            for _ in range(rng.randint(0, 3)):
                noun = rng.choice(nouns)
                deprel = rng.choice(karaka_deprels + other_deprels)
                children.append((noun, noun, "NOUN", deprel))
            for _ in range(rng.choice([0, 0, 1, 1, 2])):
                adv = rng.choice(known_adverbs + unknown_adverbs)
                children.append((adv, adv, "ADV", "advmod"))
            slot_of_verb = len(rows) + len(children)
            for form, lemma, upos, deprel in children:
                rows.append((form, lemma, upos, slot_of_verb, deprel))
            head_slot = None if v_index == 0 else verb_slots[0]
            lemma_cell = verb
            form_cell = verb
            if underscore_budget > 0 and rng.random() < 0.08:
                lemma_cell = "_"
                underscore_budget -= 1
            rows.append((form_cell, lemma_cell, "VERB", head_slot, "main" if v_index == 0 else "vmod"))
            verb_slots.append(slot_of_verb)
        out_lines.append(f"# sent_id = {sent_no}")
        out_lines.append("# text = " + " ".join(form for form, *_ in rows))
        if sent_no % 17 == 0 and len(rows) >= 2:
            out_lines.append(f"1-2\t{rows[0][0]}{rows[1][0]}\t_\t_\t_\t_\t_\t_\t_\t_")
        if sent_no % 29 == 0:
            out_lines.append("1.1\tellided\tellided\tVERB\t_\t_\t_\t_\t_\t_")
        for slot, (form, lemma, upos, head_slot, deprel) in enumerate(rows):
            token_id = slot + 1
            head = 0 if head_slot is None else head_slot + 1
            out_lines.append(f"{token_id}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_")
        out_lines.append("")
    (FIXTURES / "hi_corpus.conllu").write_text("\n".join(out_lines) + "\n", encoding="utf-8", newline="\n")

    # -- service tokens -----------------------------------------------------
    tokens = [
        {"token": "alice-token", "user": "alice", "role": "contributor"},
        {"token": "bob-token", "user": "bob", "role": "reviewer"},
        {"token": "carol-token", "user": "carol", "role": "contributor"},
        {"token": "dan-token", "user": "dan", "role": "reviewer"},
    ]
    (FIXTURES / "tokens.json").write_text(json.dumps(tokens, indent=2) + "\n", encoding="utf-8")

    # -- two-coder annotation records (for the CLI golden test) ------------
    rng2 = random.Random(7)
    codes = ["ME", "BA", "KK", "LL", "PW", "WW", "GG"]
    record_lines = []
    for i in range(40):
        label_a = rng2.choice(codes)
        label_b = label_a if rng2.random() < 0.8 else rng2.choice(codes)
        record_lines.append(f"item{i:03d}:verb:1\t{label_a}\t{label_b}")
    (FIXTURES / "records_verbs.tsv").write_text("\n".join(record_lines) + "\n", encoding="utf-8")

    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
