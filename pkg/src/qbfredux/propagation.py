"""Unit propagation with abstraction-aware universal reduction.

Propagation runs at an abstraction level ``i``: variables of blocks ``1..i``
and all existential variables count as existential, the remaining universal
variables are never assigned and are removed from clauses by universal
reduction.  At level ``n`` (the number of blocks) this is plain propositional
unit propagation; at ``max_level(C)`` it is the check that makes QUP sound for
clause ``C``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .formula import PcnfFormula, Prefix, is_tautology


class Mode(enum.Enum):
    QRAT = "qrat"  # outer resolvents checked by UP
    QRATPLUS = "qratplus"  # outer resolvents checked by QUP on an abstraction

    @property
    def propagation(self) -> str:
        return "UP" if self is Mode.QRAT else "QUP"


class Outcome(enum.Enum):
    CONFLICT = "conflict"
    FIXED_POINT = "fixed-point"


class Assumption(enum.Enum):
    ASSUMED = "assumed"
    IMMEDIATE_CONFLICT = "immediate-conflict"


@dataclass(frozen=True)
class PropagationOutcome:
    kind: Outcome
    conflict_clause: Optional[int] = None

    @property
    def conflict(self) -> bool:
        return self.kind is Outcome.CONFLICT


@dataclass
class Trail:
    formula: PcnfFormula
    level: int
    assignment: dict[int, bool] = field(default_factory=dict)
    queue: deque = field(default_factory=deque)
    # assigned literals in assignment order
    literals: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not 0 <= self.level <= self.formula.prefix.num_blocks:
            raise ValueError(f"abstraction level {self.level} out of range")

    def value(self, lit: int) -> Optional[bool]:
        val = self.assignment.get(abs(lit))
        if val is None:
            return None
        return val == (lit > 0)

    def assign(self, lit: int) -> None:
        var = abs(lit)
        if var in self.assignment:
            raise ValueError(f"variable {var} assigned twice")
        self.assignment[var] = lit > 0
        self.literals.append(lit)
        self.queue.append(lit)


def universal_reduce(prefix: Prefix, clause, i: int = 0) -> tuple[int, ...]:
    """Drop universal literals that have no existential literal nested deeper.

    Literals of blocks ``1..i`` count as existential.
    """
    clause = tuple(clause)
    if is_tautology(clause):
        raise ValueError(f"universal reduction of tautological clause {clause}")
    deepest = max(
        (prefix.level_of(k) for k in clause if prefix.is_existential_under(k, i)), default=0
    )
    return tuple(
        k for k in clause if prefix.is_existential_under(k, i) or prefix.level_of(k) < deepest
    )


def assume_negation(trail: Trail, clause) -> Assumption:
    prefix = trail.formula.prefix
    for lit in clause:
        if not prefix.is_existential_under(lit, trail.level):
            raise ValueError(f"assumption over universal variable {abs(lit)}")
    if is_tautology(clause):
        return Assumption.IMMEDIATE_CONFLICT
    for lit in clause:
        trail.assign(-lit)
    return Assumption.ASSUMED


def _unit_or_empty(clause, trail: Trail, levels, universal) -> Optional[int]:
    """Return 0 for a conflicting clause, the unit literal, or None otherwise."""
    assignment = trail.assignment
    i = trail.level
    unit = 0
    exist_seen = 0
    blocking_universal = False
    for k in clause:
        val = assignment.get(abs(k))
        if val is None:
            if abs(k) in universal and levels[abs(k)] > i:
                # kept only if an existential literal follows it
                blocking_universal = True
            else:
                exist_seen += 1
                if exist_seen > 1:
                    return None
                if blocking_universal:
                    return None
                unit = k
        elif val == (k > 0):
            return None
    return unit


def propagate(f: PcnfFormula, trail: Trail) -> PropagationOutcome:
    """Run QUP at the trail's abstraction level until conflict or fixed point."""
    levels = f.prefix.level_map
    universal = f.prefix.universal_vars

    def visit(cid: int) -> bool:
        found = _unit_or_empty(f.clauses[cid], trail, levels, universal)
        if found is None:
            return False
        if found == 0:
            return True
        trail.assign(found)
        return False

    for cid in sorted(f.short):
        if visit(cid):
            return PropagationOutcome(Outcome.CONFLICT, cid)
    while trail.queue:
        lit = trail.queue.popleft()
        for cid in sorted(f.occurrences.get(-lit, ())):
            if visit(cid):
                trail.queue.clear()
                return PropagationOutcome(Outcome.CONFLICT, cid)
    return PropagationOutcome(Outcome.FIXED_POINT)


def refutes_negation(f: PcnfFormula, clause, level: int) -> bool:
    """Whether propagating the negation of ``clause`` at ``level`` conflicts."""
    trail = Trail(f, level)
    if assume_negation(trail, clause) is Assumption.IMMEDIATE_CONFLICT:
        return True
    return propagate(f, trail).conflict


def at_check(f: PcnfFormula, clause) -> bool:
    """Asymmetric tautology: UP on the propositional matrix refutes the negation."""
    return refutes_negation(f, clause, f.prefix.num_blocks)


def qat_check(f: PcnfFormula, clause) -> bool:
    """Quantified asymmetric tautology, checked at the clause's maximum level."""
    return refutes_negation(f, clause, f.prefix.max_level(clause))
