"""Optimal text fragmentation from lexical-cohesion similarity curves."""

from .cohesion import WindowConfig, cosine, similarity_curve, top_k_terms, window_vector
from .corpus import Document, Paragraph, PreprocessConfig, load_stopwords, preprocess, split_paragraphs, tokenize
from .costs import CostSpec, length_cost
from .evaluation import FragmentStats, brute_force_segment, fragment_lengths, length_stats
from .segmenter import SegmentInput, Segmentation, segment, total_cost

__all__ = [
    "CostSpec",
    "Document",
    "FragmentStats",
    "Paragraph",
    "PreprocessConfig",
    "SegmentInput",
    "Segmentation",
    "WindowConfig",
    "brute_force_segment",
    "cosine",
    "fragment_lengths",
    "length_cost",
    "length_stats",
    "load_stopwords",
    "preprocess",
    "segment",
    "similarity_curve",
    "split_paragraphs",
    "tokenize",
    "top_k_terms",
    "total_cost",
    "window_vector",
]
