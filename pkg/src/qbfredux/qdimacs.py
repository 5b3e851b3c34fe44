"""QDIMACS reading and writing, plus the plain-text elimination trace."""

from __future__ import annotations

import enum
import io
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

from .formula import Clause, PcnfFormula, Prefix, Quantifier, is_tautology
from .propagation import Mode

log = logging.getLogger(__name__)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass
class ParseDiagnostics:
    warnings: list[tuple[int, str]] = field(default_factory=list)
    dropped_tautologies: int = 0
    merged_duplicate_literals: int = 0
    freed_variables_bound: int = 0

    def warn(self, line: int, message: str) -> None:
        log.warning("line %d: %s", line, message)
        self.warnings.append((line, message))


def _lines(text: Union[str, TextIO]) -> Iterable[str]:
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def parse_qdimacs(text: Union[str, TextIO]) -> tuple[PcnfFormula, ParseDiagnostics]:
    """Parse QDIMACS into a normalized formula.

    Duplicate literals are merged, tautologies dropped, and variables that
    occur in clauses without being quantified are bound in an outermost
    existential block.
    """
    diag = ParseDiagnostics()
    header: Optional[tuple[int, int]] = None
    blocks: list[tuple[Quantifier, list[int]]] = []
    bound: set[int] = set()
    clauses: list[tuple[int, list[int]]] = []
    pending: list[int] = []
    pending_line = 0
    lineno = 0

    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate header")
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError(lineno, f"malformed header: {line!r}")
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError(lineno, f"malformed header: {line!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(lineno, f"malformed header: {line!r}")
            continue
        if header is None:
            raise ParseError(lineno, "missing header before content")
        max_var = header[0]

        if tokens[0] in ("a", "e"):
            if clauses or pending:
                raise ParseError(lineno, "quantifier line after clauses")
            try:
                values = [int(t) for t in tokens[1:]]
            except ValueError:
                raise ParseError(lineno, f"non-integer token in {line!r}") from None
            if not values or values[-1] != 0:
                raise ParseError(lineno, "quantifier line not terminated by 0")
            variables = values[:-1]
            for v in variables:
                if v == 0:
                    raise ParseError(lineno, "literal 0 inside quantifier line")
                if v < 0:
                    raise ParseError(lineno, f"negative variable {v} in quantifier line")
                if v > max_var:
                    raise ParseError(lineno, f"variable {v} exceeds declared maximum {max_var}")
                if v in bound:
                    raise ParseError(lineno, f"variable {v} quantified twice")
                bound.add(v)
            if not variables:
                diag.warn(lineno, "empty quantifier block ignored")
                continue
            blocks.append((Quantifier(tokens[0]), variables))
            continue

        for token in tokens:
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(lineno, f"non-integer token {token!r}") from None
            if abs(lit) > max_var:
                raise ParseError(lineno, f"variable {abs(lit)} exceeds declared maximum {max_var}")
            if lit == 0:
                clauses.append((pending_line or lineno, pending))
                pending = []
                pending_line = 0
            else:
                if not pending:
                    pending_line = lineno
                pending.append(lit)

    if header is None:
        raise ParseError(lineno, "missing header")
    if pending:
        raise ParseError(pending_line, "unterminated clause")
    if len(clauses) != header[1]:
        diag.warn(lineno, f"header declares {header[1]} clauses, found {len(clauses)}")

    free = sorted({abs(lit) for _, lits in clauses for lit in lits} - bound)
    if free:
        diag.freed_variables_bound = len(free)
        diag.warn(0, f"binding {len(free)} free variables existentially")
        blocks.insert(0, (Quantifier.EXISTS, free))

    f = PcnfFormula(Prefix.build(blocks), num_vars=header[0])
    for line, lits in clauses:
        unique = set(lits)
        if len(unique) < len(lits):
            diag.merged_duplicate_literals += len(lits) - len(unique)
        if is_tautology(unique):
            diag.dropped_tautologies += 1
            diag.warn(line, "tautological clause dropped")
            continue
        f.add_clause(unique)
    return f, diag


def write_qdimacs(f: PcnfFormula) -> str:
    out = [f"p cnf {f.num_vars} {len(f)}"]
    for block in f.prefix.blocks:
        out.append(" ".join([str(block.quantifier), *map(str, block.variables), "0"]))
    for clause in f:
        out.append(" ".join([*map(str, clause), "0"]))
    return "\n".join(out) + "\n"


class EventKind(enum.Enum):
    CLAUSE_DELETED = "d"
    UNIVERSAL_LITERAL_DELETED = "u"


@dataclass(frozen=True)
class TraceEvent:
    """One elimination step.

    ``clause`` is the clause as it was before the step.  ``witness`` is the
    pivot of a deleted clause (``None`` when the clause was deleted because
    it is implied outright) or the removed universal literal.
    """

    kind: EventKind
    witness: Optional[int]
    clause: Clause
    mode: Mode

    def __post_init__(self):
        if self.witness is not None and self.witness not in self.clause:
            raise ValueError(f"witness {self.witness} not in clause {self.clause}")
        if self.kind is EventKind.UNIVERSAL_LITERAL_DELETED and self.witness is None:
            raise ValueError("universal literal deletion needs a witness")

    def line(self) -> str:
        if self.witness is None:
            lits = self.clause
        else:
            lits = (self.witness, *(k for k in self.clause if k != self.witness))
        return " ".join([self.kind.value, *map(str, lits), "0"])


def write_trace(events: Iterable[TraceEvent]) -> str:
    return "".join(event.line() + "\n" for event in events)


def replay_trace(f: PcnfFormula, trace: Union[str, TextIO]) -> PcnfFormula:
    """Apply a written trace to a copy of ``f``.

    Each step acts on the live clause with the lowest id whose literal set
    matches the recorded clause.
    """
    g = f.copy()
    for lineno, raw in enumerate(_lines(trace), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] not in ("d", "u") or tokens[-1] != "0":
            raise ParseError(lineno, f"malformed trace line {raw.strip()!r}")
        lits = [int(t) for t in tokens[1:-1]]
        target = frozenset(lits)
        candidates = (
            g.occurrences.get(lits[0], ()) if lits else (cid for cid, c in g.clauses.items() if not c)
        )
        match = min((cid for cid in candidates if frozenset(g.clauses[cid]) == target), default=None)
        if match is None:
            raise ParseError(lineno, f"no live clause matches {sorted(target)}")
        if tokens[0] == "d":
            g.remove_clause(match)
        else:
            g.remove_literal(match, lits[0])
    return g
