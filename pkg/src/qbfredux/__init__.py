"""QRAT and QRAT+ redundancy elimination for prenex CNF QBFs.

Typical use::

    from qbfredux import gen_phi_c, preprocess, PreprocessConfig, Mode

    f = gen_phi_c(3)
    g, trace, stats = preprocess(f, PreprocessConfig(mode=Mode.QRATPLUS))
    assert len(g) == 0
"""

from .formula import Clause, PcnfFormula, Prefix, Quantifier, QuantifierBlock, abstract_formula
from .generators import (
    RandomQbfConfig,
    gen_lqparity,
    gen_phi_c,
    gen_phi_l,
    gen_quparity,
    gen_random_qbf,
)
from .oracle import Verdict, evaluate, sat_equivalent, tree_implies
from .propagation import Mode, at_check, propagate, qat_check, universal_reduce
from .qdimacs import EventKind, TraceEvent, parse_qdimacs, replay_trace, write_qdimacs, write_trace
from .redundancy import (
    EliminationStats,
    PreprocessConfig,
    clause_implied,
    has_redundancy,
    outer_clause,
    outer_resolvent,
    preprocess,
    qrate_pass,
    qratu_pass,
    ur_pass,
)

__version__ = "0.1.0"
