"""Inter-coder agreement (Cohen's kappa) and evaluation-sample drawing."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .ontology import Lexicon, LexiconEntry, parse_sense_code

# Qualitative strength bands for kappa values (Landis and Koch).
_BANDS = (
    (0.0, "Poor"),
    (0.20, "Slight"),
    (0.40, "Fair"),
    (0.60, "Moderate"),
    (0.80, "Substantial"),
    (1.0, "Almost Perfect"),
)


@dataclass(frozen=True)
class AnnotationRecord:
    """One doubly-annotated item: two coders' labels for the same item."""

    item_id: str
    label_a: str
    label_b: str


@dataclass(frozen=True)
class KappaResult:
    n: int
    p_o: float
    p_e: float
    kappa: float

    @property
    def band(self) -> str:
        """Landis-Koch qualitative band for the kappa value."""
        value = round(self.kappa, 9)  # keep float noise off the band boundaries
        if value < 0:
            return "Poor"
        for upper, name in _BANDS[1:]:
            if value <= upper:
                return name
        return "Almost Perfect"

    def format(self, precision: int = 2) -> str:
        return f"{self.kappa:.{precision}f}"


def cohen_kappa(records: Sequence[AnnotationRecord]) -> KappaResult:
    """Chance-corrected agreement between two coders over categorical labels.

    p_o is the share of agreeing items; p_e the product of the two coders'
    marginals summed over categories. Rejects an empty record list and the
    degenerate p_e = 1 case (both coders constant on one category), where
    kappa is undefined.
    """
    if not records:
        raise ValueError("cannot compute kappa over zero records")
    n = len(records)
    agreements = sum(1 for r in records if r.label_a == r.label_b)
    marginals_a = Counter(r.label_a for r in records)
    marginals_b = Counter(r.label_b for r in records)
    p_o = agreements / n
    p_e = sum(marginals_a[label] * marginals_b.get(label, 0) for label in marginals_a) / (n * n)
    if p_e == 1.0:
        raise ValueError("expected agreement is 1 (single shared category); kappa undefined")
    kappa = (p_o - p_e) / (1.0 - p_e)
    return KappaResult(n=n, p_o=p_o, p_e=p_e, kappa=kappa)


def validate_record_labels(records: Sequence[AnnotationRecord], pos: str) -> None:
    """Check that every label belongs to the sense inventory for `pos`."""
    for record in records:
        parse_sense_code(pos, record.label_a)
        parse_sense_code(pos, record.label_b)


def load_annotation_records(path: str | Path) -> list[AnnotationRecord]:
    """Read headerless `item_id<TAB>label_a<TAB>label_b` rows."""
    records = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 3 tab-separated fields, got {len(fields)}")
        records.append(AnnotationRecord(*fields))
    return records


def item_id(entry: LexiconEntry) -> str:
    return f"{entry.lemma}:{entry.pos}:{entry.sense_index}"


def draw_sample(lexicon: Lexicon, pos: str, n: int, seed: int) -> list[str]:
    """Uniform sample of n item ids without replacement, reproducible by seed."""
    population = [item_id(e) for e in lexicon if e.pos == pos]
    if n < 0:
        raise ValueError("sample size must be nonnegative")
    if n > len(population):
        raise ValueError(f"requested {n} items but only {len(population)} {pos} entries exist")
    return random.Random(seed).sample(population, n)
