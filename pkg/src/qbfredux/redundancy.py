"""QRAT and QRAT+ redundancy checks and the elimination passes built on them.

A clause ``C`` has QRAT (QRAT+) on ``l`` when every outer resolvent of ``C``
with a clause containing ``-l`` is tautological or has AT (QAT) with respect
to the formula without ``C``.  On an existential pivot the whole clause can
be deleted; on a universal pivot just that literal.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Collection, Optional

from .formula import Clause, PcnfFormula, Prefix, is_tautology
from .propagation import Mode, at_check, qat_check, universal_reduce
from .qdimacs import EventKind, TraceEvent

__all__ = [
    "EliminationStats",
    "Mode",
    "PreprocessConfig",
    "clause_implied",
    "has_redundancy",
    "outer_clause",
    "outer_resolvent",
    "preprocess",
    "qrate_pass",
    "qratu_pass",
    "ur_pass",
]

log = logging.getLogger(__name__)


@dataclass
class EliminationStats:
    clauses_deleted: int = 0
    universal_literals_deleted: int = 0
    redundancy_checks: int = 0
    propagation_calls: int = 0
    rounds: int = 0
    timed_out: bool = False
    empty_clause: bool = False

    def lines(self) -> list[str]:
        return [f"c {key} {int(value)}" for key, value in vars(self).items()]


@dataclass
class PreprocessConfig:
    mode: Mode = Mode.QRATPLUS
    enable_qrate: bool = True
    enable_qratu: bool = True
    enable_ur_pass: bool = False
    soft_timeout: float = 0.0  # seconds, 0 means unlimited
    max_rounds: int = 0  # 0 means until fixed point
    # restrict QRATU to literals of these variables; None means all universals
    qratu_variables: Optional[frozenset] = None

    def __post_init__(self):
        if not (self.enable_qrate or self.enable_qratu or self.enable_ur_pass):
            raise ValueError("at least one elimination rule must be enabled")
        if self.soft_timeout < 0 or self.max_rounds < 0:
            raise ValueError("soft_timeout and max_rounds must be nonnegative")


def outer_clause(prefix: Prefix, clause: Clause, lit: int) -> Clause:
    """Literals of ``clause`` up to ``lit`` in prefix order, without ``lit``."""
    if lit not in clause:
        raise ValueError(f"literal {lit} not in clause {clause}")
    bound = prefix.position(lit)
    return tuple(k for k in clause if k != lit and prefix.position(k) <= bound)


def outer_resolvent(prefix: Prefix, c: Clause, d: Clause, lit: int) -> Clause:
    """``(c - {lit}) | outer_clause(d, -lit)``; the result may be tautological."""
    if lit not in c:
        raise ValueError(f"literal {lit} not in clause {c}")
    if -lit not in d:
        raise ValueError(f"literal {-lit} not in clause {d}")
    return prefix.canonical([*(k for k in c if k != lit), *outer_clause(prefix, d, -lit)])


def _implied(f: PcnfFormula, clause, mode: Mode, stats: Optional[EliminationStats]) -> bool:
    if stats is not None:
        stats.propagation_calls += 1
    return at_check(f, clause) if mode is Mode.QRAT else qat_check(f, clause)


def has_redundancy(
    f: PcnfFormula,
    clause: Clause,
    lit: int,
    mode: Mode,
    stats: Optional[EliminationStats] = None,
) -> bool:
    """QRAT or QRAT+ of ``clause`` on ``lit``; ``clause`` must not be in ``f``."""
    if lit not in clause:
        raise ValueError(f"literal {lit} not in clause {clause}")
    # an identical clause may legitimately remain (duplicates), so the
    # candidate's absence is the caller's responsibility
    if stats is not None:
        stats.redundancy_checks += 1
    for cid in sorted(f.occurrences.get(-lit, ())):
        resolvent = outer_resolvent(f.prefix, clause, f.clauses[cid], lit)
        if is_tautology(resolvent):
            continue
        if not _implied(f, resolvent, mode, stats):
            return False
    return True


def clause_implied(
    f: PcnfFormula, clause: Clause, mode: Mode, stats: Optional[EliminationStats] = None
) -> bool:
    """Whether ``clause`` is implied by ``f`` via AT (QRAT) or QAT (QRAT+)."""
    return _implied(f, clause, mode, stats)


def _expired(deadline: Optional[float], stats: Optional[EliminationStats]) -> bool:
    if deadline is None or time.monotonic() < deadline:
        return False
    if stats is not None:
        stats.timed_out = True
    return True


def qrate_pass(
    f: PcnfFormula,
    mode: Mode,
    deadline: Optional[float] = None,
    stats: Optional[EliminationStats] = None,
) -> tuple[list[TraceEvent], bool]:
    """Delete redundant clauses in ascending id order."""
    events: list[TraceEvent] = []
    prefix = f.prefix
    for cid in sorted(f.clauses):
        if cid not in f.clauses or not f.clauses[cid]:
            continue
        if _expired(deadline, stats):
            break
        with f.detached(cid) as held:
            clause = held.clause
            if clause_implied(f, clause, mode, stats):
                held.deleted = True
                events.append(TraceEvent(EventKind.CLAUSE_DELETED, None, clause, mode))
                continue
            for lit in clause:
                if prefix.is_universal(lit):
                    continue
                if has_redundancy(f, clause, lit, mode, stats):
                    held.deleted = True
                    events.append(TraceEvent(EventKind.CLAUSE_DELETED, lit, clause, mode))
                    break
    if stats is not None:
        stats.clauses_deleted += len(events)
    return events, bool(events)


def qratu_pass(
    f: PcnfFormula,
    mode: Mode,
    deadline: Optional[float] = None,
    stats: Optional[EliminationStats] = None,
    variables: Optional[Collection[int]] = None,
) -> tuple[list[TraceEvent], bool]:
    """Remove redundant universal literals, clause by clause in id order.

    ``variables`` limits the candidates to literals of those variables.
    """
    events: list[TraceEvent] = []
    prefix = f.prefix
    for cid in sorted(f.clauses):
        if cid not in f.clauses:
            continue
        universals = [
            lit
            for lit in f.clauses[cid]
            if prefix.is_universal(lit) and (variables is None or abs(lit) in variables)
        ]
        if not universals:
            continue
        if _expired(deadline, stats):
            break
        with f.detached(cid) as held:
            for lit in universals:
                if has_redundancy(f, held.clause, lit, mode, stats):
                    events.append(
                        TraceEvent(EventKind.UNIVERSAL_LITERAL_DELETED, lit, held.clause, mode)
                    )
                    held.clause = tuple(k for k in held.clause if k != lit)
            if not held.clause:
                log.info("clause %d reduced to the empty clause", cid)
    if stats is not None:
        stats.universal_literals_deleted += len(events)
    return events, bool(events)


def ur_pass(
    f: PcnfFormula, mode: Mode = Mode.QRATPLUS, stats: Optional[EliminationStats] = None
) -> tuple[bool, list[TraceEvent]]:
    """Apply plain universal reduction to every clause."""
    events: list[TraceEvent] = []
    for cid in sorted(f.clauses):
        clause = f.clauses[cid]
        reduced = universal_reduce(f.prefix, clause, 0)
        for lit in clause:
            if lit not in reduced:
                events.append(
                    TraceEvent(EventKind.UNIVERSAL_LITERAL_DELETED, lit, f.clauses[cid], mode)
                )
                f.remove_literal(cid, lit)
    if stats is not None:
        stats.universal_literals_deleted += len(events)
    return bool(events), events


def preprocess(
    f: PcnfFormula, cfg: Optional[PreprocessConfig] = None
) -> tuple[PcnfFormula, list[TraceEvent], EliminationStats]:
    """Eliminate redundancies until a fixed point, the round limit or the deadline.

    The input formula is left untouched; the reduced copy is returned together
    with the elimination trace.
    """
    cfg = cfg or PreprocessConfig()
    g = f.copy()
    stats = EliminationStats()
    trace: list[TraceEvent] = []
    deadline = time.monotonic() + cfg.soft_timeout if cfg.soft_timeout > 0 else None

    while not (cfg.max_rounds and stats.rounds >= cfg.max_rounds):
        stats.rounds += 1
        changed = False
        if cfg.enable_ur_pass:
            ur_changed, events = ur_pass(g, cfg.mode, stats)
            trace.extend(events)
            changed |= ur_changed
        if cfg.enable_qrate and not stats.timed_out:
            events, qrate_changed = qrate_pass(g, cfg.mode, deadline, stats)
            trace.extend(events)
            changed |= qrate_changed
        if cfg.enable_qratu and not stats.timed_out:
            events, qratu_changed = qratu_pass(g, cfg.mode, deadline, stats, cfg.qratu_variables)
            trace.extend(events)
            changed |= qratu_changed
        log.debug("round %d: %d clauses left", stats.rounds, len(g))
        if stats.timed_out or not changed:
            break

    stats.empty_clause = g.has_empty_clause
    return g, trace, stats
