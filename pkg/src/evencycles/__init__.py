"""Packing versus covering for even cycles through a vertex set."""
from .graph import (BlockTree, Cycle, DisconnectedError, GraphError, LabeledGraph, ParseError,
                    block_tree, parse_graph, serialize_graph)
from .cycles import EVEN_A, CyclePredicate, PreconditionError, enumerate_cycles
from .certificates import HittingSet, Packing
from .budget import BudgetError, OracleBudget

__version__ = "0.1.0"
