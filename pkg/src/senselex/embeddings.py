"""Pretrained word-vector loading and neighbor-vote sense propagation.

A target word inherits the majority sense of its labeled cosine neighbors
above a threshold (default 0.7). Proposals are evidence-carrying values and
are never written back into a lexicon; manual review owns that step.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .ontology import Lexicon

DEFAULT_TAU = 0.7
DEFAULT_MIN_CLUSTER = 1


class VectorFormatError(ValueError):
    """A word2vec text file violates the declared header or row shape."""


class OutOfVocabularyError(ValueError):
    """A queried word has no vector."""


class AlreadyLabeledError(ValueError):
    """Propagation target already has a lexicon entry for the requested pos."""


class EmbeddingSpace:
    """Fixed-dimension word vectors with cosine geometry; immutable after load."""

    def __init__(self, vectors: Mapping[str, Sequence[float]], dim: int | None = None):
        if dim is None:
            if not vectors:
                raise ValueError("dim is required for an empty vocabulary")
            dim = len(next(iter(vectors.values())))
        if dim < 1:
            raise ValueError("dim must be a positive integer")
        self.dim = dim
        self._vectors: dict[str, np.ndarray] = {}
        self._norms: dict[str, float] = {}
        for word, values in vectors.items():
            if not word:
                raise ValueError("vocabulary words must be non-empty")
            arr = np.asarray(values, dtype=np.float64)
            if arr.shape != (dim,):
                raise ValueError(f"vector for {word!r} has {arr.size} components, expected {dim}")
            arr.setflags(write=False)
            self._vectors[word] = arr
            self._norms[word] = float(np.linalg.norm(arr))

    def __contains__(self, word: str) -> bool:
        return word in self._vectors

    def __len__(self) -> int:
        return len(self._vectors)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self._vectors)

    def vector(self, word: str) -> np.ndarray:
        try:
            return self._vectors[word]
        except KeyError:
            raise OutOfVocabularyError(f"word {word!r} not in vocabulary") from None

    def cosine(self, a: str, b: str) -> float:
        """Cosine similarity of two vocabulary words, in [-1, 1]."""
        va, vb = self.vector(a), self.vector(b)
        na, nb = self._norms[a], self._norms[b]
        if na == 0.0:
            raise ValueError(f"word {a!r} has a zero vector")
        if nb == 0.0:
            raise ValueError(f"word {b!r} has a zero vector")
        value = float(np.dot(va, vb) / (na * nb))
        return max(-1.0, min(1.0, value))

    def neighbors(
        self,
        target: str,
        labeled: Iterable[tuple[str, str]],
        tau: float = DEFAULT_TAU,
    ) -> "SimilarityCluster":
        """Labeled words with cosine(target, word) >= tau, target excluded.

        Labeled words absent from the vocabulary are skipped; they have no
        geometry to compare. Members come back sorted by descending cosine.
        """
        if not 0.0 < tau <= 1.0:
            raise ValueError(f"tau must be in (0, 1], got {tau}")
        if target not in self:
            raise OutOfVocabularyError(f"word {target!r} not in vocabulary")
        members = []
        for word, sense in labeled:
            if word == target or word not in self:
                continue
            similarity = self.cosine(target, word)
            if similarity >= tau:
                members.append(ClusterMember(word, similarity, sense))
        members.sort(key=lambda m: (-m.cosine, m.word))
        return SimilarityCluster(target=target, members=tuple(members), threshold=tau)


def load_vectors(path: str | Path) -> EmbeddingSpace:
    """Load a word2vec text file: `<count> <dim>` header, then one word per row.

    Rejects count/row mismatches, wrong component counts, non-numeric
    components, and duplicate words. Vocabulary words are NFC-normalized.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise VectorFormatError("empty file, expected '<count> <dim>' header")
    header = lines[0].split()
    if len(header) != 2:
        raise VectorFormatError(f"malformed header {lines[0]!r}, expected '<count> <dim>'")
    try:
        declared_count, dim = int(header[0]), int(header[1])
    except ValueError:
        raise VectorFormatError(f"malformed header {lines[0]!r}, expected two integers") from None
    if dim < 1:
        raise VectorFormatError(f"declared dimension must be positive, got {dim}")
    vectors: dict[str, list[float]] = {}
    for line in lines[1:]:
        parts = line.split()
        if not parts:
            raise VectorFormatError("blank row in vector file")
        word = unicodedata.normalize("NFC", parts[0])
        components = parts[1:]
        if len(components) != dim:
            raise VectorFormatError(
                f"word {word!r} has {len(components)} components, expected {dim}"
            )
        try:
            values = [float(c) for c in components]
        except ValueError:
            raise VectorFormatError(f"word {word!r} has a non-numeric component") from None
        if word in vectors:
            raise VectorFormatError(f"duplicate word {word!r}")
        vectors[word] = values
    if len(vectors) != declared_count:
        raise VectorFormatError(
            f"header declares {declared_count} words but file has {len(vectors)} rows"
        )
    return EmbeddingSpace(vectors, dim=dim)


@dataclass(frozen=True)
class ClusterMember:
    word: str
    cosine: float
    sense: str


@dataclass(frozen=True)
class SimilarityCluster:
    target: str
    members: tuple[ClusterMember, ...]
    threshold: float

    def __len__(self) -> int:
        return len(self.members)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(m.word for m in self.members)


@dataclass(frozen=True)
class PropagationResult:
    """Majority-vote outcome over a similarity cluster; a proposal, not a fact."""

    target: str
    proposed_sense: str
    cluster: SimilarityCluster
    vote_counts: dict[str, int]
    tie_broken: bool

    def evidence_dict(self) -> dict:
        """JSON-safe evidence payload for a review proposal."""
        return {
            "threshold": float(self.cluster.threshold),
            "cluster": [
                {"word": m.word, "cosine": float(m.cosine), "sense": m.sense}
                for m in self.cluster.members
            ],
            "vote_counts": dict(self.vote_counts),
            "tie_broken": self.tie_broken,
        }


def labeled_pool(lexicon: Lexicon, pos: str) -> list[tuple[str, str]]:
    """(lemma, primary sense) pairs usable as propagation evidence.

    Polysemous lemmas contribute their sense_index=1 entry only, so each
    word votes once.
    """
    return [
        (entry.lemma, entry.primary_sense)
        for entry in lexicon
        if entry.pos == pos and entry.sense_index == 1
    ]


def propagate_sense(
    space: EmbeddingSpace,
    target: str,
    lexicon: Lexicon,
    pos: str,
    tau: float = DEFAULT_TAU,
    min_cluster: int = DEFAULT_MIN_CLUSTER,
) -> PropagationResult | None:
    """Propose a sense for an unlabeled target by neighbor majority vote.

    Returns None when the cluster has fewer than `min_cluster` members (a
    no-proposal outcome, not an error). Count ties are broken by greatest
    summed cosine of the supporting members, then by lexicographically
    smallest sense code, and flagged via `tie_broken`.
    """
    if pos not in ("verb", "adverb"):
        raise ValueError(f"propagation is defined for verbs and adverbs, not {pos!r}")
    if min_cluster < 1:
        raise ValueError("min_cluster must be >= 1")
    target = unicodedata.normalize("NFC", target)
    if lexicon.lookup(target, pos):
        raise AlreadyLabeledError(f"{target!r} already has a {pos} entry")
    cluster = space.neighbors(target, labeled_pool(lexicon, pos), tau)
    if len(cluster) < min_cluster:
        return None
    vote_counts: dict[str, int] = {}
    summed_cosine: dict[str, float] = {}
    for member in cluster.members:
        vote_counts[member.sense] = vote_counts.get(member.sense, 0) + 1
        summed_cosine[member.sense] = summed_cosine.get(member.sense, 0.0) + member.cosine
    top_count = max(vote_counts.values())
    candidates = sorted(code for code, count in vote_counts.items() if count == top_count)
    tie_broken = len(candidates) > 1
    if tie_broken:
        top_sum = max(summed_cosine[code] for code in candidates)
        best = min(code for code in candidates if summed_cosine[code] == top_sum)
    else:
        best = candidates[0]
    return PropagationResult(
        target=target,
        proposed_sense=best,
        cluster=cluster,
        vote_counts=vote_counts,
        tie_broken=tie_broken,
    )


@dataclass(frozen=True)
class TargetOutcome:
    target: str
    status: str  # proposed | no_proposal | out_of_vocabulary | already_labeled
    result: PropagationResult | None = None
    gold_sense: str | None = None
    correct: bool | None = None


@dataclass
class PropagationReport:
    """Batch propagation outcomes plus accuracy against an optional gold lexicon."""

    pos: str
    tau: float
    min_cluster: int
    outcomes: list[TargetOutcome] = field(default_factory=list)
    labeled_pool_size: int = 0
    labeled_out_of_vocab: int = 0

    @property
    def proposed(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "proposed")

    @property
    def judged(self) -> int:
        return sum(1 for o in self.outcomes if o.correct is not None)

    @property
    def correct(self) -> int:
        return sum(1 for o in self.outcomes if o.correct)

    @property
    def accuracy(self) -> float | None:
        """Percentage of judged proposals that match gold, full precision."""
        if self.judged == 0:
            return None
        return 100.0 * self.correct / self.judged


def propagation_report(
    space: EmbeddingSpace,
    targets: Sequence[str],
    lexicon: Lexicon,
    pos: str,
    tau: float = DEFAULT_TAU,
    min_cluster: int = DEFAULT_MIN_CLUSTER,
    gold: Lexicon | None = None,
) -> PropagationReport:
    """Run propagate_sense per target, collecting outcomes instead of failing."""
    if not targets:
        raise ValueError("targets must be non-empty")
    pool = labeled_pool(lexicon, pos)
    report = PropagationReport(
        pos=pos,
        tau=tau,
        min_cluster=min_cluster,
        labeled_pool_size=len(pool),
        labeled_out_of_vocab=sum(1 for word, _ in pool if word not in space),
    )
    for target in targets:
        try:
            result = propagate_sense(space, target, lexicon, pos, tau, min_cluster)
        except OutOfVocabularyError:
            report.outcomes.append(TargetOutcome(target, "out_of_vocabulary"))
            continue
        except AlreadyLabeledError:
            report.outcomes.append(TargetOutcome(target, "already_labeled"))
            continue
        if result is None:
            report.outcomes.append(TargetOutcome(target, "no_proposal"))
            continue
        gold_sense = None
        correct = None
        if gold is not None:
            gold_entries = gold.lookup(result.target, pos)
            for entry in gold_entries:
                if entry.sense_index == 1:
                    gold_sense = entry.primary_sense
                    correct = gold_sense == result.proposed_sense
                    break
        report.outcomes.append(
            TargetOutcome(target, "proposed", result=result, gold_sense=gold_sense, correct=correct)
        )
    return report
