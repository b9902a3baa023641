"""Sense inventories, lexicon entries, and the TSV interchange format.

The inventories are closed: seven verb sense-types (each anchored to a
primitive verb), four adverb sense-classes, six adjective sense-types, and
eight karaka relation codes. Lexicon files are 9-column UTF-8 TSV; loading
validates every row and rejects the whole file on the first violation.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator


class VerbSenseType(Enum):
    """Seven verb sense discriminants, each anchored to a primitive verb."""

    ME = ("ME", "Means|End", "Do")
    BA = ("BA", "Before|After", "Move")
    KK = ("KK", "Know|Known", "Know")
    LL = ("LL", "Locus|Located", "Is")
    PW = ("PW", "Part|Whole", "Cut")
    WW = ("WW", "Wrap|Wrapped", "Cover")
    GG = ("GG", "Grip|Grasp", "Have")

    def __new__(cls, code: str, label: str, primitive: str):
        obj = object.__new__(cls)
        obj._value_ = code
        obj.label = label
        obj.primitive = primitive
        return obj


class AdverbSenseClass(Enum):
    """Four adverb sense-classes describing what aspect of a verb is modified."""

    TMP = ("TMP", "Temporal")
    SPT = ("SPT", "Spatial")
    FRC = ("FRC", "Force")
    MSR = ("MSR", "Measure")

    def __new__(cls, code: str, label: str):
        obj = object.__new__(cls)
        obj._value_ = code
        obj.label = label
        return obj


class AdjectiveSenseType(Enum):
    """Six adjective sense-type pairs."""

    LOC = ("LOC", "Locational")
    QNT = ("QNT", "Quantity")
    REL = ("REL", "Relational")
    STR = ("STR", "Stress")
    JUD = ("JUD", "Judgement")
    PRP = ("PRP", "Property")

    def __new__(cls, code: str, label: str):
        obj = object.__new__(cls)
        obj._value_ = code
        obj.label = label
        return obj


class Karaka(Enum):
    """Eight verb-nominal relation codes with their transliterated names."""

    K1 = ("K1", "kartā")
    K2 = ("K2", "karma")
    K3 = ("K3", "karna")
    K4 = ("K4", "sampradāna")
    K5 = ("K5", "apādān")
    K6 = ("K6", "sambandh")
    K7 = ("K7", "adhikaran")
    K8 = ("K8", "sambodhan")

    def __new__(cls, code: str, name: str):
        obj = object.__new__(cls)
        obj._value_ = code
        obj.relation_name = name
        return obj


LANGUAGES = ("hi", "te", "en")
POS_VALUES = ("verb", "adverb", "adjective")
PROVENANCES = ("manual", "propagated", "crowd")

#: Sense inventory governing each part of speech.
SENSE_INVENTORY = {
    "verb": VerbSenseType,
    "adverb": AdverbSenseClass,
    "adjective": AdjectiveSenseType,
}

TSV_COLUMNS = (
    "lemma",
    "language",
    "pos",
    "sense_index",
    "gloss",
    "primary_sense",
    "secondary_sense",
    "provenance",
    "example",
)
TSV_HEADER = "\t".join(TSV_COLUMNS)


class EmptyPopulationError(ValueError):
    """Raised when a distribution is requested over zero entries."""


class LexiconFormatError(ValueError):
    """A lexicon TSV file violates the format; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def parse_sense_code(pos: str, code: str) -> str:
    """Return `code` if it belongs to the inventory for `pos`, else raise."""
    inventory = SENSE_INVENTORY.get(pos)
    if inventory is None:
        raise ValueError(f"unknown pos {pos!r}")
    try:
        return inventory(code).value
    except ValueError:
        raise ValueError(f"unknown {pos} sense code {code!r}") from None


@dataclass(frozen=True)
class LexiconEntry:
    """One (lemma, language, pos, sense_index) row of the lexicon.

    Verbs carry an ordered (primary, secondary) sense-type pair; adverbs and
    adjectives carry a single primary sense and an empty secondary. Lemmas
    are stored NFC-normalized.
    """

    lemma: str
    language: str
    pos: str
    sense_index: int
    primary_sense: str
    secondary_sense: str = ""
    gloss: str = ""
    provenance: str = "manual"
    example: str = ""

    def __post_init__(self):
        object.__setattr__(self, "lemma", unicodedata.normalize("NFC", self.lemma))
        if not self.lemma:
            raise ValueError("lemma must be non-empty")
        if self.language not in LANGUAGES:
            raise ValueError(f"unknown language code {self.language!r}")
        if self.pos not in POS_VALUES:
            raise ValueError(f"unknown pos {self.pos!r}")
        if not isinstance(self.sense_index, int) or self.sense_index < 1:
            raise ValueError("sense_index must be an integer >= 1")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        parse_sense_code(self.pos, self.primary_sense)
        if self.pos == "verb":
            if not self.secondary_sense:
                raise ValueError("verb entries require a secondary sense")
            parse_sense_code("verb", self.secondary_sense)
            if self.secondary_sense == self.primary_sense:
                raise ValueError("verb primary and secondary senses must differ")
        elif self.secondary_sense:
            raise ValueError(f"{self.pos} entries must have an empty secondary sense")

    @property
    def key(self) -> tuple[str, str, str, int]:
        return (self.lemma, self.language, self.pos, self.sense_index)


class Lexicon:
    """Immutable, validated collection of entries sharing one language."""

    def __init__(self, entries: Iterable[LexiconEntry], language: str):
        if language not in LANGUAGES:
            raise ValueError(f"unknown language code {language!r}")
        self.language = language
        self._entries = tuple(sorted(entries, key=lambda e: (e.lemma, e.pos, e.sense_index)))
        seen: set[tuple] = set()
        groups: dict[tuple, list[int]] = {}
        for entry in self._entries:
            if entry.language != language:
                raise ValueError(
                    f"entry {entry.lemma!r} has language {entry.language!r}, "
                    f"lexicon is {language!r}"
                )
            if entry.key in seen:
                raise ValueError(f"duplicate entry key {entry.key}")
            seen.add(entry.key)
            groups.setdefault((entry.lemma, entry.pos), []).append(entry.sense_index)
        for (lemma, pos), indexes in groups.items():
            if sorted(indexes) != list(range(1, len(indexes) + 1)):
                raise ValueError(
                    f"sense_index values for {lemma!r}/{pos} must form a "
                    f"contiguous 1..k range, got {sorted(indexes)}"
                )
        self._by_lemma = {}
        for entry in self._entries:
            self._by_lemma.setdefault(entry.lemma, []).append(entry)

    @property
    def entries(self) -> tuple[LexiconEntry, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries)

    def lookup(self, lemma: str, pos: str | None = None) -> list[LexiconEntry]:
        """All entries for `lemma` (NFC-normalized first), in sense_index order."""
        lemma = unicodedata.normalize("NFC", lemma)
        matches = self._by_lemma.get(lemma, [])
        if pos is not None:
            if pos not in POS_VALUES:
                raise ValueError(f"unknown pos {pos!r}")
            matches = [e for e in matches if e.pos == pos]
        return sorted(matches, key=lambda e: (e.pos, e.sense_index))

    def sense_distribution(self, pos: str, which: str = "primary") -> dict[str, float]:
        """Percentage of entries of `pos` per sense code; all codes present.

        Percentages are full precision (they sum to 100 within 1e-9); render
        to one decimal place for display.
        """
        if pos not in POS_VALUES:
            raise ValueError(f"unknown pos {pos!r}")
        if which not in ("primary", "secondary"):
            raise ValueError(f"which must be 'primary' or 'secondary', got {which!r}")
        if which == "secondary" and pos != "verb":
            raise ValueError("secondary senses exist only for verbs")
        population = [e for e in self._entries if e.pos == pos]
        if not population:
            raise EmptyPopulationError(f"lexicon has no {pos} entries")
        counts = {member.value: 0 for member in SENSE_INVENTORY[pos]}
        for entry in population:
            code = entry.primary_sense if which == "primary" else entry.secondary_sense
            counts[code] += 1
        total = len(population)
        return {code: 100.0 * count / total for code, count in counts.items()}

    def with_entry(self, entry: LexiconEntry) -> "Lexicon":
        """New lexicon with `entry` inserted, replacing any entry of equal key."""
        kept = [e for e in self._entries if e.key != entry.key]
        kept.append(entry)
        return Lexicon(kept, self.language)


def _format_row(entry: LexiconEntry) -> str:
    return "\t".join(
        (
            entry.lemma,
            entry.language,
            entry.pos,
            str(entry.sense_index),
            entry.gloss,
            entry.primary_sense,
            entry.secondary_sense,
            entry.provenance,
            entry.example,
        )
    )


def load_lexicon(path: str | Path, language: str) -> Lexicon:
    """Load and validate a lexicon TSV file.

    The whole file is rejected on the first invalid row; the raised
    LexiconFormatError carries the 1-based line number.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != TSV_HEADER:
        raise LexiconFormatError(1, f"malformed header, expected {TSV_HEADER!r}")
    entries: list[LexiconEntry] = []
    lines_by_key: dict[tuple, int] = {}
    group_rows: dict[tuple, list[tuple[int, int]]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields_ = line.split("\t")
        if len(fields_) != len(TSV_COLUMNS):
            raise LexiconFormatError(
                lineno, f"expected {len(TSV_COLUMNS)} tab-separated fields, got {len(fields_)}"
            )
        lemma, lang, pos, index_text, gloss, primary, secondary, provenance, example = fields_
        if any(ch.isspace() for ch in lemma):
            raise LexiconFormatError(lineno, f"lemma {lemma!r} contains whitespace")
        try:
            sense_index = int(index_text)
        except ValueError:
            raise LexiconFormatError(
                lineno, f"sense_index must be an integer, got {index_text!r}"
            ) from None
        try:
            entry = LexiconEntry(
                lemma=lemma,
                language=lang,
                pos=pos,
                sense_index=sense_index,
                primary_sense=primary,
                secondary_sense=secondary,
                gloss=gloss,
                provenance=provenance,
                example=example,
            )
        except ValueError as exc:
            raise LexiconFormatError(lineno, str(exc)) from None
        if entry.language != language:
            raise LexiconFormatError(
                lineno, f"entry language {entry.language!r} does not match lexicon language {language!r}"
            )
        if entry.key in lines_by_key:
            raise LexiconFormatError(
                lineno, f"duplicate key {entry.key} (first seen on line {lines_by_key[entry.key]})"
            )
        lines_by_key[entry.key] = lineno
        group_rows.setdefault((entry.lemma, entry.pos), []).append((entry.sense_index, lineno))
        entries.append(entry)
    for (lemma, pos), rows in group_rows.items():
        indexes = sorted(rows)
        for position, (sense_index, lineno) in enumerate(indexes, start=1):
            if sense_index != position:
                raise LexiconFormatError(
                    lineno,
                    f"sense_index values for {lemma!r}/{pos} must form a contiguous "
                    f"1..k range, got {[i for i, _ in indexes]}",
                )
    return Lexicon(entries, language)


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write the TSV format; deterministic, rows sorted by (lemma, pos, sense_index)."""
    rows = []
    for entry in sorted(lexicon.entries, key=lambda e: (e.lemma, e.pos, e.sense_index)):
        if any(ch.isspace() for ch in entry.lemma):
            raise ValueError(f"lemma {entry.lemma!r} contains whitespace, forbidden by the TSV format")
        for field in fields(entry):
            value = getattr(entry, field.name)
            if isinstance(value, str) and any(ch in value for ch in "\t\n\r"):
                raise ValueError(
                    f"field {field.name} of entry {entry.lemma!r} contains a "
                    "tab or newline, forbidden by the TSV format"
                )
        rows.append(_format_row(entry))
    content = TSV_HEADER + "\n" + "".join(row + "\n" for row in rows)
    Path(path).write_text(content, encoding="utf-8", newline="\n")
