"""CoNLL-U ingestion and distributional analyses over parsed corpora.

Covers adverbial sense-class profiles of frequent verbs, the verb
sense-type by karaka contingency matrix, per-corpus verb sense-type
frequency profiles, and log-likelihood comparison between two corpora.
"""

from __future__ import annotations

import math
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .ontology import AdverbSenseClass, Karaka, Lexicon, VerbSenseType

DEFAULT_MIN_FREQ = 50

#: Karaka deprels: k1..k8, case-insensitive, non-digit suffixes ignored ("k1s" -> K1).
KARAKA_DEPREL_RE = re.compile(r"k([1-8])(\D.*)?", re.IGNORECASE)

OVERUSED_IN_A = "overused-in-a"
OVERUSED_IN_B = "overused-in-b"
EQUAL = "equal"


class ConlluFormatError(ValueError):
    """A CoNLL-U file violates the format; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Token:
    id: int
    form: str
    lemma: str
    upos: str
    head: int  # 0 = root
    deprel: str


@dataclass(frozen=True)
class ParsedSentence:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        for position, token in enumerate(self.tokens, start=1):
            if token.id != position:
                raise ValueError(f"token ids must be contiguous from 1, got {token.id} at position {position}")
        last = len(self.tokens)
        for token in self.tokens:
            if not 0 <= token.head <= last:
                raise ValueError(f"token {token.id} head {token.head} out of range 0..{last}")
            if token.head == token.id:
                raise ValueError(f"token {token.id} is its own head")

    def __len__(self) -> int:
        return len(self.tokens)

    def head_of(self, token: Token) -> Token | None:
        return self.tokens[token.head - 1] if token.head else None


def attribution_lemma(token: Token) -> str:
    """Lemma used for lexicon attribution; falls back to the form when unset."""
    return token.lemma if token.lemma != "_" else token.form


_RANGE_ID_RE = re.compile(r"\d+-\d+")
_EMPTY_ID_RE = re.compile(r"\d+\.\d+")


def parse_conllu(path: str | Path) -> list[ParsedSentence]:
    """Parse a CoNLL-U file into validated sentences.

    Comment lines are ignored, multiword-token ranges (ids like "1-2") and
    empty nodes (ids like "1.1") are skipped, and only the id, form, lemma,
    upos, head, and deprel columns are retained. Any malformation rejects
    the file with its line number.
    """
    sentences: list[ParsedSentence] = []
    pending: list[Token] = []
    pending_lines: list[int] = []

    def flush():
        if not pending:
            return
        last = len(pending)
        for token, lineno in zip(pending, pending_lines):
            if not 0 <= token.head <= last:
                raise ConlluFormatError(lineno, f"head {token.head} out of range 0..{last}")
            if token.head == token.id:
                raise ConlluFormatError(lineno, f"token {token.id} is its own head")
        sentences.append(ParsedSentence(tuple(pending)))
        pending.clear()
        pending_lines.clear()

    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 10:
            raise ConlluFormatError(lineno, f"expected 10 tab-separated columns, got {len(columns)}")
        id_text, form, lemma, upos, _xpos, _feats, head_text, deprel, _deps, _misc = columns
        if _RANGE_ID_RE.fullmatch(id_text) or _EMPTY_ID_RE.fullmatch(id_text):
            continue
        try:
            token_id = int(id_text)
        except ValueError:
            raise ConlluFormatError(lineno, f"malformed token id {id_text!r}") from None
        if token_id != len(pending) + 1:
            raise ConlluFormatError(
                lineno, f"token ids must be contiguous from 1, got {token_id} after {len(pending)} tokens"
            )
        try:
            head = int(head_text)
        except ValueError:
            raise ConlluFormatError(lineno, f"malformed head {head_text!r}") from None
        pending.append(
            Token(
                id=token_id,
                form=unicodedata.normalize("NFC", form),
                lemma=unicodedata.normalize("NFC", lemma),
                upos=upos,
                head=head,
                deprel=deprel,
            )
        )
        pending_lines.append(lineno)
    flush()
    return sentences


def _primary_sense(lexicon: Lexicon, lemma: str, pos: str) -> str | None:
    """Primary sense of the sense_index=1 entry, or None when unlisted.

    Corpus tokens carry no polysemy index, so the first (most salient)
    entry stands in for the lemma.
    """
    for entry in lexicon.lookup(lemma, pos):
        if entry.sense_index == 1:
            return entry.primary_sense
    return None


@dataclass(frozen=True)
class AdverbialProfile:
    """Sense-class distribution of the adverbs modifying one verb."""

    verb_lemma: str
    verb_freq: int
    class_counts: dict[str, int]
    class_percent: dict[str, float]
    unknown_adverb_count: int

    @property
    def has_known_modifiers(self) -> bool:
        return any(self.class_counts.values())

    @property
    def nonzero_classes(self) -> tuple[str, ...]:
        """Classes with nonzero share, in inventory order."""
        return tuple(m.value for m in AdverbSenseClass if self.class_percent[m.value] > 0)


def adverbial_profiles(
    sentences: Iterable[ParsedSentence],
    lexicon: Lexicon,
    min_freq: int = DEFAULT_MIN_FREQ,
) -> list[AdverbialProfile]:
    """Adverb sense-class profile of every verb with token frequency > min_freq.

    Adverb dependents (upos ADV) are classed via the adverb lexicon; adverbs
    missing from it are tallied per verb and excluded from the percentages.
    A verb with no classed modifier gets an all-zero profile, flagged via
    `has_known_modifiers`.
    """
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    sentences = list(sentences)
    verb_freq: dict[str, int] = {}
    for sentence in sentences:
        for token in sentence.tokens:
            if token.upos == "VERB":
                lemma = attribution_lemma(token)
                verb_freq[lemma] = verb_freq.get(lemma, 0) + 1
    selected = {lemma for lemma, freq in verb_freq.items() if freq > min_freq}
    counts = {lemma: {m.value: 0 for m in AdverbSenseClass} for lemma in selected}
    unknown = {lemma: 0 for lemma in selected}
    for sentence in sentences:
        for token in sentence.tokens:
            if token.upos != "ADV":
                continue
            head = sentence.head_of(token)
            if head is None or head.upos != "VERB":
                continue
            verb_lemma = attribution_lemma(head)
            if verb_lemma not in selected:
                continue
            sense = _primary_sense(lexicon, attribution_lemma(token), "adverb")
            if sense is None:
                unknown[verb_lemma] += 1
            else:
                counts[verb_lemma][sense] += 1
    profiles = []
    for lemma in selected:
        total = sum(counts[lemma].values())
        if total:
            percent = {code: 100.0 * n / total for code, n in counts[lemma].items()}
        else:
            percent = {code: 0.0 for code in counts[lemma]}
        profiles.append(
            AdverbialProfile(
                verb_lemma=lemma,
                verb_freq=verb_freq[lemma],
                class_counts=counts[lemma],
                class_percent=percent,
                unknown_adverb_count=unknown[lemma],
            )
        )
    profiles.sort(key=lambda p: (-p.verb_freq, p.verb_lemma))
    return profiles


@dataclass(frozen=True)
class KarakaMatrix:
    """Verb sense-type by karaka counts with row-normalized percentages."""

    counts: dict[str, dict[str, int]]
    row_percent: dict[str, dict[str, float]]
    unknown_verb_edges: int


def karaka_matrix(sentences: Iterable[ParsedSentence], lexicon: Lexicon) -> KarakaMatrix:
    """Tally karaka edges against the primary sense-type of the head verb.

    Edges whose head verb is missing from the lexicon are counted in
    `unknown_verb_edges` instead of the matrix.
    """
    counts = {s.value: {k.value: 0 for k in Karaka} for s in VerbSenseType}
    unknown_edges = 0
    for sentence in sentences:
        for token in sentence.tokens:
            match = KARAKA_DEPREL_RE.fullmatch(token.deprel)
            if not match:
                continue
            head = sentence.head_of(token)
            if head is None or head.upos != "VERB":
                continue
            sense = _primary_sense(lexicon, attribution_lemma(head), "verb")
            if sense is None:
                unknown_edges += 1
                continue
            counts[sense][f"K{match.group(1)}"] += 1
    row_percent = {}
    for sense, row in counts.items():
        total = sum(row.values())
        if total:
            row_percent[sense] = {k: 100.0 * n / total for k, n in row.items()}
        else:
            row_percent[sense] = {k: 0.0 for k in row}
    return KarakaMatrix(counts=counts, row_percent=row_percent, unknown_verb_edges=unknown_edges)


@dataclass(frozen=True)
class SenseTypeProfile:
    """Verb sense-type frequency profile of one corpus."""

    corpus_name: str
    token_total: int
    counts: dict[str, int]
    percent: dict[str, float]
    unknown_verb_tokens: int


def sense_type_profile(
    sentences: Iterable[ParsedSentence], lexicon: Lexicon, name: str
) -> SenseTypeProfile:
    """Count each lexicon-listed VERB token under its primary sense-type."""
    counts = {s.value: 0 for s in VerbSenseType}
    unknown = 0
    for sentence in sentences:
        for token in sentence.tokens:
            if token.upos != "VERB":
                continue
            sense = _primary_sense(lexicon, attribution_lemma(token), "verb")
            if sense is None:
                unknown += 1
            else:
                counts[sense] += 1
    total = sum(counts.values())
    if total:
        percent = {code: 100.0 * n / total for code, n in counts.items()}
    else:
        percent = {code: 0.0 for code in counts}
    return SenseTypeProfile(
        corpus_name=name,
        token_total=total,
        counts=counts,
        percent=percent,
        unknown_verb_tokens=unknown,
    )


def log_likelihood(count_a: int, count_b: int, total_a: int, total_b: int) -> float:
    """Log-likelihood statistic of a 2x2 contingency table.

    With E1 = total_a*(count_a+count_b)/(total_a+total_b) and E2 likewise,
    LL = 2*(count_a*ln(count_a/E1) + count_b*ln(count_b/E2)), where a zero
    count contributes zero. Returns exactly 0.0 when the proportions match.
    """
    if min(count_a, count_b, total_a, total_b) < 0:
        raise ValueError("counts and totals must be nonnegative")
    if count_a > total_a:
        raise ValueError(f"count_a {count_a} exceeds total_a {total_a}")
    if count_b > total_b:
        raise ValueError(f"count_b {count_b} exceeds total_b {total_b}")
    if total_a + total_b == 0:
        raise ValueError("totals are both zero")
    if count_a + count_b == 0:
        raise ValueError("both counts are zero")
    if count_a * total_b == count_b * total_a:
        return 0.0
    combined = count_a + count_b
    grand = total_a + total_b
    value = 0.0
    if count_a:
        expected_a = total_a * combined / grand
        value += count_a * math.log(count_a / expected_a)
    if count_b:
        expected_b = total_b * combined / grand
        value += count_b * math.log(count_b / expected_b)
    return 2.0 * value


@dataclass(frozen=True)
class LLRow:
    sense: str
    count_a: int
    count_b: int
    total_a: int
    total_b: int
    ll: float
    direction: str  # overused-in-a | overused-in-b | equal


@dataclass(frozen=True)
class LLComparison:
    """Per-sense log-likelihood rows between two corpora, most indicative first."""

    name_a: str
    name_b: str
    rows: tuple[LLRow, ...]

    @property
    def most_indicative(self) -> str:
        return self.rows[0].sense


def compare_corpora(profile_a: SenseTypeProfile, profile_b: SenseTypeProfile) -> LLComparison:
    """Log-likelihood keyness of each verb sense-type between two profiles."""
    if profile_a.token_total == 0 or profile_b.token_total == 0:
        raise ValueError("both profiles must cover at least one attributed verb token")
    rows = []
    for sense in (s.value for s in VerbSenseType):
        a = profile_a.counts[sense]
        b = profile_b.counts[sense]
        ta = profile_a.token_total
        tb = profile_b.token_total
        if a == 0 and b == 0:
            ll, direction = 0.0, EQUAL
        else:
            ll = log_likelihood(a, b, ta, tb)
            if a * tb > b * ta:
                direction = OVERUSED_IN_A
            elif a * tb < b * ta:
                direction = OVERUSED_IN_B
            else:
                direction = EQUAL
        rows.append(LLRow(sense, a, b, ta, tb, ll, direction))
    rows.sort(key=lambda r: (-r.ll, r.sense))
    return LLComparison(name_a=profile_a.corpus_name, name_b=profile_b.corpus_name, rows=tuple(rows))


@dataclass(frozen=True)
class AdverbClassComparison:
    """Side-by-side nonzero adverb class sets for verbs profiled in two corpora."""

    rows: tuple[tuple[str, tuple[str, ...], tuple[str, ...]], ...]
    only_in_a: tuple[str, ...]
    only_in_b: tuple[str, ...]


def author_adverb_comparison(
    profiles_a: Sequence[AdverbialProfile], profiles_b: Sequence[AdverbialProfile]
) -> AdverbClassComparison:
    """Compare which adverb classes modify each shared verb in two profile sets."""
    by_lemma_a = {p.verb_lemma: p for p in profiles_a}
    by_lemma_b = {p.verb_lemma: p for p in profiles_b}
    shared = sorted(set(by_lemma_a) & set(by_lemma_b))
    rows = tuple(
        (lemma, by_lemma_a[lemma].nonzero_classes, by_lemma_b[lemma].nonzero_classes)
        for lemma in shared
    )
    return AdverbClassComparison(
        rows=rows,
        only_in_a=tuple(sorted(set(by_lemma_a) - set(by_lemma_b))),
        only_in_b=tuple(sorted(set(by_lemma_b) - set(by_lemma_a))),
    )
