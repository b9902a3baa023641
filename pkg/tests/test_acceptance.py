"""Acceptance gate: one test per release criterion, oracle-checked.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion.
"""

import csv
import json
import math
import random
import re
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

import senselex as sx
from senselex.service import Store, TokenTable, create_app

FIXTURES = Path(__file__).parent / "fixtures"

VERB_CODES = [m.value for m in sx.VerbSenseType]
ADVERB_CODES = [m.value for m in sx.AdverbSenseClass]


def announce(name: str, elapsed: float | None = None) -> None:
    suffix = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    print(f"ACCEPTANCE PASS: {name}{suffix}")


# -- criterion 1: Cohen's kappa vs independent oracle -------------------------


def kappa_oracle(pairs):
    cats = sorted({a for a, _ in pairs} | {b for _, b in pairs})
    index = {c: i for i, c in enumerate(cats)}
    k, n = len(cats), len(pairs)
    table = [[0] * k for _ in range(k)]
    for a, b in pairs:
        table[index[a]][index[b]] += 1
    p_o = sum(table[i][i] for i in range(k)) / n
    p_e = sum((sum(table[i]) / n) * (sum(row[i] for row in table) / n) for i in range(k))
    return (p_o - p_e) / (1 - p_e)


def test_kappa_matches_oracle_on_1000_random_sets():
    start = time.monotonic()
    rng = random.Random(20240810)
    for _ in range(1000):
        k = rng.randint(2, 7)
        codes = VERB_CODES[:k]
        n = rng.randint(2, 500)
        pairs = [(rng.choice(codes), rng.choice(codes)) for _ in range(n - 1)]
        pairs.append((codes[0], codes[1]))  # keeps p_e < 1
        records = [sx.AnnotationRecord(str(i), a, b) for i, (a, b) in enumerate(pairs)]
        assert abs(sx.cohen_kappa(records).kappa - kappa_oracle(pairs)) < 1e-12

    perfect = [sx.AnnotationRecord(str(i), c, c) for i, c in enumerate(["ME", "BA"] * 25)]
    assert sx.cohen_kappa(perfect).kappa == 1.0

    hand = (
        [("ME", "ME")] * 40 + [("BA", "BA")] * 40 + [("ME", "BA")] * 10 + [("BA", "ME")] * 10
    )
    hand_records = [sx.AnnotationRecord(str(i), a, b) for i, (a, b) in enumerate(hand)]
    assert abs(sx.cohen_kappa(hand_records).kappa - 0.6) < 1e-12

    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    announce("cohen_kappa oracle agreement (1000 sets), exact 1.0, hand case 0.6", elapsed)


# -- criterion 2: log-likelihood ----------------------------------------------


def test_log_likelihood_zero_derived_and_symmetry():
    start = time.monotonic()
    rng = random.Random(77)
    for _ in range(200):
        base_total = rng.randint(1, 1000)
        base_count = rng.randint(1, base_total)
        m_a, m_b = rng.randint(1, 1000), rng.randint(1, 1000)
        # a/total_a == b/total_b by construction
        value = sx.log_likelihood(base_count * m_a, base_count * m_b, base_total * m_a, base_total * m_b)
        assert abs(value) < 1e-12

    assert sx.log_likelihood(10, 20, 100, 200) == 0.0
    assert abs(sx.log_likelihood(10, 30, 100, 200) - 1.3132) < 1e-3

    for _ in range(10_000):
        total_a, total_b = rng.randint(1, 10**6), rng.randint(1, 10**6)
        a, b = rng.randint(0, total_a), rng.randint(0, total_b)
        if a + b == 0:
            continue
        forward = sx.log_likelihood(a, b, total_a, total_b)
        backward = sx.log_likelihood(b, a, total_b, total_a)
        assert abs(forward - backward) < 1e-12
        assert forward >= 0.0

    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    announce("log_likelihood proportional-zero, derived value, 10k-table symmetry", elapsed)


# -- criterion 3: propagation vs brute-force oracle ----------------------------


def propagate_oracle(vectors, target, labeled, tau, min_cluster):
    def cosine(u, v):
        dot = sum(x * y for x, y in zip(u, v))
        return dot / (math.sqrt(sum(x * x for x in u)) * math.sqrt(sum(y * y for y in v)))

    members = []
    for word, sense in labeled:
        if word == target or word not in vectors:
            continue
        value = cosine(vectors[target], vectors[word])
        if value >= tau:
            members.append((word, value, sense))
    if len(members) < min_cluster:
        return None
    counts, sums = {}, {}
    for word, value, sense in members:
        counts[sense] = counts.get(sense, 0) + 1
        sums[sense] = sums.get(sense, 0.0) + value
    top = max(counts.values())
    candidates = [s for s, c in counts.items() if c == top]
    tie = len(candidates) > 1
    if tie:
        best = max(sums[s] for s in candidates)
        winner = min(s for s in candidates if sums[s] == best)
    else:
        winner = candidates[0]
    return winner, tie, frozenset(w for w, _, _ in members)


def test_propagation_matches_bruteforce_oracle_and_reference_fixture():
    start = time.monotonic()
    rng = random.Random(424242)
    proposals = 0
    for _ in range(500):
        dim = rng.randint(2, 10)
        vocab = rng.randint(4, 50)
        words = [f"w{i}" for i in range(vocab)]
        vectors = {
            w: [rng.uniform(-1.0, 1.0) for _ in range(dim)] for w in words
        }
        for vec in vectors.values():  # no zero vectors in random fixtures
            if all(abs(x) < 1e-3 for x in vec):
                vec[0] = 0.5
        target = words[0]
        labeled_words = words[1 : rng.randint(2, vocab)]
        codes = VERB_CODES[: rng.randint(2, 7)]
        labeled = [(w, rng.choice(codes)) for w in labeled_words]
        tau = rng.uniform(0.2, 0.95)
        min_cluster = rng.randint(1, 3)

        entries = []
        for word, code in labeled:
            secondary = "BA" if code != "BA" else "ME"
            entries.append(sx.LexiconEntry(word, "hi", "verb", 1, code, secondary))
        entries.append(sx.LexiconEntry("oovword", "hi", "verb", 1, "ME", "BA"))
        lexicon = sx.Lexicon(entries, "hi")
        space = sx.EmbeddingSpace(vectors, dim=dim)

        expected = propagate_oracle(vectors, target, labeled + [("oovword", "ME")], tau, min_cluster)
        actual = sx.propagate_sense(space, target, lexicon, "verb", tau, min_cluster)
        if expected is None:
            assert actual is None
        else:
            winner, tie, member_words = expected
            assert actual is not None
            assert actual.proposed_sense == winner
            assert actual.tie_broken == tie
            assert frozenset(actual.cluster.words) == member_words
            proposals += 1
    assert proposals > 50  # the sweep must actually exercise proposals

    labeled_lexicon = sx.load_lexicon(FIXTURES / "hi_labeled.tsv", "hi")
    space = sx.load_vectors(FIXTURES / "hi_vectors.vec")
    tear = sx.propagate_sense(space, "cīranā", labeled_lexicon, "verb")
    assert sx.VerbSenseType(tear.proposed_sense).label == "Part|Whole"
    assert set(tear.cluster.words) == {
        "nocanā", "ghisanā", "chedanā", "khuracanā",
        "pīsanā", "phulānā",
    }
    sudden = sx.propagate_sense(space, "yakāyaka", labeled_lexicon, "adverb")
    assert sx.AdverbSenseClass(sudden.proposed_sense).label == "Temporal"
    assert set(sudden.cluster.words) == {"sahasā", "ekāeka", "acānaka"}

    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    announce("propagate_sense oracle agreement (500 fixtures) + reference clusters", elapsed)


# -- criterion 4: corpus analytics vs flat-scan tallies -------------------------


def load_sense_maps():
    verb_sense, adverb_sense = {}, {}
    with (FIXTURES / "hi_core.tsv").open(encoding="utf-8") as handle:
        reader = csv.DictReader(handle, delimiter="\t")
        for row in reader:
            if int(row["sense_index"]) != 1:
                continue
            if row["pos"] == "verb":
                verb_sense[row["lemma"]] = row["primary_sense"]
            elif row["pos"] == "adverb":
                adverb_sense[row["lemma"]] = row["primary_sense"]
    return verb_sense, adverb_sense


def test_corpus_analytics_match_flat_scan_tallies():
    start = time.monotonic()
    sentences = sx.parse_conllu(FIXTURES / "hi_corpus.conllu")
    assert len(sentences) == 100
    lexicon = sx.load_lexicon(FIXTURES / "hi_core.tsv", "hi")
    verb_sense, adverb_sense = load_sense_maps()

    def lemma_of(token):
        return token.lemma if token.lemma != "_" else token.form

    # flat-scan verb frequencies
    freq = {}
    for sent in sentences:
        for token in sent.tokens:
            if token.upos == "VERB":
                freq[lemma_of(token)] = freq.get(lemma_of(token), 0) + 1

    # min_freq is strictly "> 50"
    assert freq["bahanā"] == 50 and freq["karanā"] == 51
    profiles = sx.adverbial_profiles(sentences, lexicon, min_freq=50)
    profiled = {p.verb_lemma for p in profiles}
    assert "karanā" in profiled and "bahanā" not in profiled

    # flat-scan adverbial tallies
    expected_counts = {v: {c: 0 for c in ADVERB_CODES} for v in profiled}
    expected_unknown = {v: 0 for v in profiled}
    for sent in sentences:
        for token in sent.tokens:
            if token.upos != "ADV" or token.head == 0:
                continue
            head = sent.tokens[token.head - 1]
            if head.upos != "VERB":
                continue
            verb = lemma_of(head)
            if verb not in profiled:
                continue
            sense = adverb_sense.get(lemma_of(token))
            if sense is None:
                expected_unknown[verb] += 1
            else:
                expected_counts[verb][sense] += 1
    for profile in profiles:
        assert profile.verb_freq == freq[profile.verb_lemma]
        assert profile.class_counts == expected_counts[profile.verb_lemma]
        assert profile.unknown_adverb_count == expected_unknown[profile.verb_lemma]
        if profile.has_known_modifiers:
            assert abs(sum(profile.class_percent.values()) - 100.0) < 1e-9

    # flat-scan karaka tallies
    pattern = re.compile(r"[kK]([1-8])(\D.*)?$")
    expected_matrix = {s: {f"K{i}": 0 for i in range(1, 9)} for s in VERB_CODES}
    expected_unknown_edges = 0
    for sent in sentences:
        for token in sent.tokens:
            match = pattern.fullmatch(token.deprel)
            if not match or token.head == 0:
                continue
            head = sent.tokens[token.head - 1]
            if head.upos != "VERB":
                continue
            sense = verb_sense.get(lemma_of(head))
            if sense is None:
                expected_unknown_edges += 1
            else:
                expected_matrix[sense][f"K{match.group(1)}"] += 1
    matrix = sx.karaka_matrix(sentences, lexicon)
    assert matrix.counts == expected_matrix
    assert matrix.unknown_verb_edges == expected_unknown_edges
    for sense in VERB_CODES:
        if sum(matrix.counts[sense].values()):
            assert abs(sum(matrix.row_percent[sense].values()) - 100.0) < 1e-9

    # flat-scan sense profile
    expected_profile = {c: 0 for c in VERB_CODES}
    expected_unlisted = 0
    for sent in sentences:
        for token in sent.tokens:
            if token.upos != "VERB":
                continue
            sense = verb_sense.get(lemma_of(token))
            if sense is None:
                expected_unlisted += 1
            else:
                expected_profile[sense] += 1
    profile = sx.sense_type_profile(sentences, lexicon, "fixture")
    assert profile.counts == expected_profile
    assert profile.unknown_verb_tokens == expected_unlisted
    assert abs(sum(profile.percent.values()) - 100.0) < 1e-9

    elapsed = time.monotonic() - start
    announce("adverbial_profiles + karaka_matrix + sense profile flat-scan equality", elapsed)


# -- criterion 5: format round-trip and rejection suites ------------------------


def test_lexicon_tsv_and_conllu_round_trip_and_rejections(tmp_path):
    lexicon = sx.load_lexicon(FIXTURES / "hi_core.tsv", "hi")
    out = tmp_path / "roundtrip.tsv"
    sx.save_lexicon(lexicon, out)
    assert set(sx.load_lexicon(out, "hi").entries) == set(lexicon.entries)
    sx.save_lexicon(lexicon, tmp_path / "again.tsv")
    assert out.read_bytes() == (tmp_path / "again.tsv").read_bytes()

    header = "lemma\tlanguage\tpos\tsense_index\tgloss\tprimary_sense\tsecondary_sense\tprovenance\texample"
    ok_row = "a\thi\tverb\t1\t\tME\tBA\tmanual\t"
    tsv_cases = [
        ("bad header", "nope\n" + ok_row + "\n", 1),
        ("wrong column count", header + "\na\thi\tverb\t1\tME\tBA\tmanual\t\n", 2),
        ("unknown sense code", header + "\na\thi\tverb\t1\t\tME\tQQ\tmanual\t\n", 2),
        ("duplicate key", header + f"\n{ok_row}\n{ok_row}\n", 3),
        ("primary equals secondary", header + "\na\thi\tverb\t1\t\tME\tME\tmanual\t\n", 2),
        ("non-contiguous index", header + f"\n{ok_row}\na\thi\tverb\t3\t\tME\tKK\tmanual\t\n", 3),
    ]
    for name, content, line in tsv_cases:
        path = tmp_path / "bad.tsv"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(sx.LexiconFormatError) as err:
            sx.load_lexicon(path, "hi")
        assert err.value.line == line, name

    token = "1\ta\ta\tVERB\t_\t_\t0\tmain\t_\t_"
    conllu_cases = [
        ("wrong column count", token + "\n2\tb\tb\tNOUN\t_\t_\t1\tk1\t_\n", 2),
        ("malformed id", "x\ta\ta\tVERB\t_\t_\t0\tmain\t_\t_\n", 1),
        ("non-contiguous id", token + "\n3\tb\tb\tNOUN\t_\t_\t1\tk1\t_\t_\n", 2),
        ("head out of range", "1\ta\ta\tVERB\t_\t_\t9\tmain\t_\t_\n", 1),
        ("self head", "1\ta\ta\tVERB\t_\t_\t1\tmain\t_\t_\n", 1),
        ("malformed head", "1\ta\ta\tVERB\t_\t_\tz\tmain\t_\t_\n", 1),
    ]
    for name, content, line in conllu_cases:
        path = tmp_path / "bad.conllu"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(sx.ConlluFormatError) as err:
            sx.parse_conllu(path)
        assert err.value.line == line, name

    announce("lexicon TSV + CoNLL-U round-trip and line-numbered rejection suites")


# -- criterion 6: service event-sourcing, concurrency, review visibility --------


def proposal_body(i):
    return {
        "lemma": f"nayāshabda{i}",
        "language": "hi",
        "pos": "verb",
        "sense_index": 1,
        "proposed_primary": "BA" if i % 2 else "GG",
        "proposed_secondary": "ME",
        "gloss": f"gloss {i}",
        "example": f"udaaharan vaakya {i}",
        "source": "crowd",
    }


def test_service_replay_concurrency_and_review_visibility(tmp_path):
    start = time.monotonic()
    lexicon = sx.load_lexicon(FIXTURES / "hi_core.tsv", "hi")
    tokens = TokenTable.from_file(FIXTURES / "tokens.json")

    store = Store(tmp_path / "data")
    store.ingest_lexicon(lexicon)
    client = TestClient(create_app(store, tokens))
    contributor = {"Authorization": "Bearer alice-token"}
    reviewer = {"Authorization": "Bearer bob-token"}

    # scripted session: exactly 50 mutating operations
    ids = []
    for i in range(20):  # 20 submits
        response = client.post("/proposals", json=proposal_body(i), headers=contributor)
        assert response.status_code == 201
        ids.append(response.json()["id"])
    for i in range(15):  # 15 comments
        response = client.post(
            f"/proposals/{ids[i % 10]}/comments",
            json={"text": f"note {i}"},
            headers=reviewer if i % 3 else contributor,
        )
        assert response.status_code == 200
    for i in range(15):  # 15 reviews
        decision = "accept" if i % 2 == 0 else "reject"
        response = client.post(
            f"/proposals/{ids[i]}/review", json={"decision": decision}, headers=reviewer
        )
        assert response.status_code == 200

    replayed = Store()
    with store.events_path.open(encoding="utf-8") as handle:
        replayed.replay(json.loads(line) for line in handle if line.strip())
    assert replayed.snapshot_bytes() == store.snapshot_bytes()

    # 20 concurrent submissions on a fresh store: all pending, distinct ids
    fresh = Store(tmp_path / "data2")
    fresh.ingest_lexicon(lexicon)
    fresh_client = TestClient(create_app(fresh, tokens))

    def submit(i):
        return fresh_client.post(
            "/proposals",
            json={**proposal_body(i), "lemma": f"samaanaantar{i}"},
            headers=contributor,
        )

    with ThreadPoolExecutor(max_workers=20) as pool:
        responses = list(pool.map(submit, range(20)))
    assert all(r.status_code == 201 for r in responses)
    distinct = {r.json()["id"] for r in responses}
    assert len(distinct) == 20
    pending = fresh_client.get("/proposals", params={"status": "pending"}).json()
    assert len(pending) == 20 and {p["id"] for p in pending} == distinct

    # accepted proposal becomes visible in lookup and stats
    before = fresh_client.get("/stats", params={"lang": "hi", "pos": "verb"}).json()["percent"]
    target = pending[0]
    assert fresh_client.get(f"/entries/hi/{target['lemma']}").status_code == 404
    fresh_client.post(
        f"/proposals/{target['id']}/review", json={"decision": "accept"}, headers=reviewer
    )
    (entry,) = fresh_client.get(f"/entries/hi/{target['lemma']}").json()
    assert entry["primary_sense"] == target["proposed_primary"]
    after = fresh_client.get("/stats", params={"lang": "hi", "pos": "verb"}).json()["percent"]
    assert after != before

    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    announce("service replay byte-identity, 20-way concurrency, review visibility", elapsed)
