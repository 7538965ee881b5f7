"""Label-preserving perturbation toolkit for slot-filling / intent-detection
evaluation corpora.

Perturbation operators (fillers, synonym swaps, near-homophone speakos and
behavioral-testing baselines) transform BIO-tagged utterances one edit at
a time without disturbing slot labels or intents; builders assemble
Random and Hard challenge sets; metrics score external prediction files
with chunk-exact slot F1, intent accuracy and strict end-to-end accuracy.
"""

__version__ = "0.1.0"

from .builders import (
    BuiltSet,
    CompositionReport,
    ConfidenceTable,
    build_hard_set,
    build_random_set,
    build_single_operator_set,
)
from .corpus import (
    Dataset,
    PerturbedUtterance,
    SlotChunk,
    Token,
    Utterance,
    chunks,
    parse_conll,
    parse_two_column,
    validate_bio,
    write_conll,
)
from .errors import (
    BioError,
    ConfigError,
    CoverageError,
    JoinError,
    OperatorError,
    ParseError,
    ProviderError,
    StructuralError,
    ToolkitError,
)
from .metrics import (
    MemorizingBaseline,
    Prediction,
    ScoreReport,
    aggregate,
    baseline_confidences,
    e2e_accuracy,
    intent_accuracy,
    score,
    slot_f1,
    trivial_baseline_predict,
)
from .operators import (
    ALL_OPERATORS,
    BASELINE_OPERATORS,
    DISPLAY_NAMES,
    SPOKEN_OPERATORS,
    OperatorId,
    apply_operator,
    make_perturber,
)
from .providers import Candidate, CandidateProvider, DictionaryProvider, RemoteMlmProvider
from .resources import ResourceBundle, default_bundle, load_bundle

__all__ = [
    "__version__",
    "BuiltSet", "CompositionReport", "ConfidenceTable", "build_hard_set",
    "build_random_set", "build_single_operator_set",
    "Dataset", "PerturbedUtterance", "SlotChunk", "Token", "Utterance",
    "chunks", "parse_conll", "parse_two_column", "validate_bio", "write_conll",
    "BioError", "ConfigError", "CoverageError", "JoinError", "OperatorError",
    "ParseError", "ProviderError", "StructuralError", "ToolkitError",
    "MemorizingBaseline", "Prediction", "ScoreReport", "aggregate",
    "baseline_confidences", "e2e_accuracy", "intent_accuracy", "score",
    "slot_f1", "trivial_baseline_predict",
    "ALL_OPERATORS", "BASELINE_OPERATORS", "DISPLAY_NAMES", "SPOKEN_OPERATORS",
    "OperatorId", "apply_operator", "make_perturber",
    "Candidate", "CandidateProvider", "DictionaryProvider", "RemoteMlmProvider",
    "ResourceBundle", "default_bundle", "load_bundle",
]
