"""Verb-centric sense lexicon toolkit.

Core pieces: closed sense inventories and a validated TSV lexicon store,
embedding-neighborhood sense propagation, inter-coder agreement, analytics
over dependency-parsed corpora, and an HTTP annotation review service.
"""

from .agreement import (
    AnnotationRecord,
    KappaResult,
    cohen_kappa,
    draw_sample,
    item_id,
    load_annotation_records,
)
from .corpus import (
    AdverbClassComparison,
    AdverbialProfile,
    ConlluFormatError,
    KarakaMatrix,
    LLComparison,
    LLRow,
    ParsedSentence,
    SenseTypeProfile,
    Token,
    adverbial_profiles,
    author_adverb_comparison,
    compare_corpora,
    karaka_matrix,
    log_likelihood,
    parse_conllu,
    sense_type_profile,
)
from .embeddings import (
    AlreadyLabeledError,
    ClusterMember,
    EmbeddingSpace,
    OutOfVocabularyError,
    PropagationReport,
    PropagationResult,
    SimilarityCluster,
    VectorFormatError,
    load_vectors,
    propagate_sense,
    propagation_report,
)
from .ontology import (
    AdjectiveSenseType,
    AdverbSenseClass,
    EmptyPopulationError,
    Karaka,
    LANGUAGES,
    Lexicon,
    LexiconEntry,
    LexiconFormatError,
    POS_VALUES,
    PROVENANCES,
    SENSE_INVENTORY,
    VerbSenseType,
    load_lexicon,
    parse_sense_code,
    save_lexicon,
)

__version__ = "0.1.0"
