"""Exhaustive generators: canonical forms, connected graphs and free trees."""

from .canonical import MAX_CANONICAL_ORDER, CanonicalForm, canonical_form, canonical_labelling
from .connected import MAX_GENERATED_ORDER, connected_graph_levels, gen_connected_graphs
from .trees import gen_trees

__all__ = [
    'MAX_CANONICAL_ORDER', 'CanonicalForm', 'canonical_form', 'canonical_labelling',
    'MAX_GENERATED_ORDER', 'connected_graph_levels', 'gen_connected_graphs',
    'gen_trees',
]
