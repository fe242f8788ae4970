"""Cover order, chain order and exhaustive shelling verification."""

from src.shelling.order import (
    ChainOrder,
    CoverLabel,
    CoverStats,
    ShellingOrderError,
    code,
    cover_label,
    cover_order,
    cover_stats,
    lex_compare,
    m_value,
    p0,
    p0_from_eta,
    precedes,
    split_block,
)
from src.shelling.verify import (
    ElLabelingReport,
    KeyLemmaReport,
    LemmaReport,
    RemarkReport,
    ShellingReport,
    SupportReport,
    recursive_atom_counterexample,
    verify_el_labeling,
    verify_key_lemma,
    verify_shelling,
    verify_support_lemmas,
)

__all__ = [
    "ChainOrder",
    "CoverLabel",
    "CoverStats",
    "ElLabelingReport",
    "KeyLemmaReport",
    "LemmaReport",
    "RemarkReport",
    "ShellingOrderError",
    "ShellingReport",
    "SupportReport",
    "code",
    "cover_label",
    "cover_order",
    "cover_stats",
    "lex_compare",
    "m_value",
    "p0",
    "p0_from_eta",
    "precedes",
    "recursive_atom_counterexample",
    "split_block",
    "verify_el_labeling",
    "verify_key_lemma",
    "verify_shelling",
    "verify_support_lemmas",
]
