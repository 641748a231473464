"""Character codegree toolkit for small finite groups.

Subpackages cover the permutation-group engine, exact character tables via
the Dixon-Schneider modular method, codegree / element-order prime graphs,
graph-theoretic recognizers for codegree prime graphs of several solvable
classes, and the symbolic tower construction certifying tightness of the
sigma^c bounds.
"""

from codegree.perm import Permutation
from codegree.group import PermutationGroup, ConjugacyClass, Subgroup, parse_group
from codegree.dixon import Character, CharacterTable, character_table
from codegree.analysis import (
    CodegreeProfile,
    PrimeGraph,
    cod_graph,
    cod_profile,
    codegree,
    gk_graph,
    gk_subgraph_of_cod,
    isaacs_check,
    prop34_class_predicate,
    prop34_verify,
)
from codegree.graphs import SimpleGraph, parse_graph
from codegree.errors import (
    CodegreeError,
    GroupParseError,
    GraphParseError,
    InternalConsistencyError,
    ResourceLimitError,
)

__all__ = [
    "Permutation",
    "PermutationGroup",
    "ConjugacyClass",
    "Subgroup",
    "parse_group",
    "Character",
    "CharacterTable",
    "character_table",
    "CodegreeProfile",
    "PrimeGraph",
    "codegree",
    "cod_profile",
    "gk_graph",
    "cod_graph",
    "isaacs_check",
    "gk_subgraph_of_cod",
    "prop34_class_predicate",
    "prop34_verify",
    "SimpleGraph",
    "parse_graph",
    "CodegreeError",
    "GroupParseError",
    "GraphParseError",
    "InternalConsistencyError",
    "ResourceLimitError",
]

__version__ = "0.1.0"
