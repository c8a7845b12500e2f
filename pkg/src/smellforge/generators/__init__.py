"""Smell-introducing transformations and their candidate finders."""

from .base import GeneratedSample, TransformDiscard, generate_all
from .feature_envy import MoveCandidateFE, find_move_candidates_feature_envy, move_method
from .large_class import MergeCandidateLC, find_merge_candidates_large_class, merge_classes
from .long_method import MergeCandidateLM, find_merge_candidates_long_method, merge_methods

__all__ = [
    "GeneratedSample",
    "TransformDiscard",
    "generate_all",
    "MergeCandidateLM",
    "find_merge_candidates_long_method",
    "merge_methods",
    "MergeCandidateLC",
    "find_merge_candidates_large_class",
    "merge_classes",
    "MoveCandidateFE",
    "find_move_candidates_feature_envy",
    "move_method",
]
