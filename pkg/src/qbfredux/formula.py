"""Prenex CNF formulas: prefixes, canonical clauses and the occurrence index.

Variables are positive integers and literals are signed integers, following
the QDIMACS numbering.  A clause is a tuple of literals sorted by prefix
position (block level first, then the order inside the block), so that the
literals of a clause never decrease in nesting level.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Clause = tuple[int, ...]


class Quantifier(enum.Enum):
    EXISTS = "e"
    FORALL = "a"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QuantifierBlock:
    quantifier: Quantifier
    variables: tuple[int, ...]
    level: int


class Prefix:
    """An alternating sequence of quantifier blocks.

    ``Prefix.build`` normalizes arbitrary input: empty blocks are dropped,
    adjacent blocks with the same quantifier are merged and variables inside a
    block are sorted by id.  The plain constructor keeps the given in-block
    order, which abstraction relies on.
    """

    def __init__(self, blocks: Iterable[tuple[Quantifier, Sequence[int]]]):
        merged: list[tuple[Quantifier, list[int]]] = []
        for quantifier, variables in blocks:
            if not variables:
                continue
            if merged and merged[-1][0] is quantifier:
                merged[-1][1].extend(variables)
            else:
                merged.append((quantifier, list(variables)))

        self.blocks: tuple[QuantifierBlock, ...] = tuple(
            QuantifierBlock(q, tuple(vs), level)
            for level, (q, vs) in enumerate(merged, start=1)
        )
        self._level: dict[int, int] = {}
        self._pos: dict[int, int] = {}
        self._universal: set[int] = set()
        for block in self.blocks:
            for v in block.variables:
                if v < 1:
                    raise ValueError(f"invalid variable id {v}")
                if v in self._level:
                    raise ValueError(f"variable {v} quantified twice")
                self._level[v] = block.level
                self._pos[v] = len(self._pos)
                if block.quantifier is Quantifier.FORALL:
                    self._universal.add(v)

    @classmethod
    def build(cls, blocks: Iterable[tuple[Quantifier, Iterable[int]]]) -> "Prefix":
        """Create a prefix with ascending variable ids inside each block."""
        normalized: list[tuple[Quantifier, list[int]]] = []
        for quantifier, variables in blocks:
            variables = list(variables)
            if normalized and normalized[-1][0] is quantifier:
                normalized[-1][1].extend(variables)
            else:
                normalized.append((quantifier, variables))
        return cls((q, sorted(vs)) for q, vs in normalized)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def variables(self) -> list[int]:
        """All variables in extended prefix order."""
        return [v for block in self.blocks for v in block.variables]

    @property
    def level_map(self) -> dict[int, int]:
        return self._level

    @property
    def universal_vars(self) -> set[int]:
        return self._universal

    @property
    def max_var(self) -> int:
        return max(self._level, default=0)

    def __contains__(self, v: int) -> bool:
        return v in self._level

    def __len__(self) -> int:
        return len(self._level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Prefix):
            return NotImplemented
        return self.blocks == other.blocks

    def __repr__(self) -> str:
        return "Prefix(" + " ".join(
            f"{b.quantifier}{{{','.join(map(str, b.variables))}}}" for b in self.blocks
        ) + ")"

    def _check(self, v: int) -> None:
        if v not in self._level:
            raise ValueError(f"variable not in prefix: {v}")

    def level_of(self, v: int) -> int:
        try:
            return self._level[abs(v)]
        except KeyError:
            raise ValueError(f"variable not in prefix: {abs(v)}") from None

    def quantifier_of(self, v: int) -> Quantifier:
        self._check(abs(v))
        return Quantifier.FORALL if abs(v) in self._universal else Quantifier.EXISTS

    def is_universal(self, v: int) -> bool:
        self._check(abs(v))
        return abs(v) in self._universal

    def is_existential_under(self, v: int, i: int) -> bool:
        """Whether ``v`` is existential once blocks ``1..i`` are abstracted."""
        v = abs(v)
        self._check(v)
        return v not in self._universal or self._level[v] <= i

    def position(self, v: int) -> int:
        """Index of ``v`` in the extended prefix order."""
        try:
            return self._pos[abs(v)]
        except KeyError:
            raise ValueError(f"variable not in prefix: {abs(v)}") from None

    def lit_leq(self, l: int, k: int) -> bool:
        return self.position(l) <= self.position(k)

    def levels_of(self, clause: Iterable[int]) -> set[int]:
        return {self.level_of(lit) for lit in clause}

    def max_level(self, clause: Iterable[int]) -> int:
        return max((self.level_of(lit) for lit in clause), default=0)

    def sort_key(self, lit: int) -> tuple[int, int]:
        # positive before negative so that tautological resolvents print as x -x
        return (self.position(lit), lit < 0)

    def canonical(self, literals: Iterable[int]) -> Clause:
        """Sort and deduplicate literals; complementary pairs are kept."""
        return tuple(sorted(set(literals), key=self.sort_key))

    def abstract(self, i: int) -> "Prefix":
        """Merge blocks ``1..i`` into one leading existential block."""
        if not 0 <= i <= self.num_blocks:
            raise ValueError(f"abstraction level {i} out of range 0..{self.num_blocks}")
        if i == 0:
            return self
        outer = [v for block in self.blocks[:i] for v in block.variables]
        rest = [(b.quantifier, b.variables) for b in self.blocks[i:]]
        return Prefix([(Quantifier.EXISTS, outer), *rest])


def is_tautology(clause: Iterable[int]) -> bool:
    lits = set(clause)
    return any(-lit in lits for lit in lits)


class PcnfFormula:
    """A prefix together with a clause store and a per-literal occurrence index.

    Clause ids are stable for the lifetime of a clause.  ``num_vars`` keeps the
    declared maximum variable of the input so that writing the formula back
    preserves the header.
    """

    def __init__(self, prefix: Prefix, clauses: Iterable[Iterable[int]] = (), num_vars: int = 0):
        self.prefix = prefix
        self.num_vars = max(num_vars, prefix.max_var)
        self.clauses: dict[int, Clause] = {}
        self.occurrences: defaultdict[int, set[int]] = defaultdict(set)
        # clauses with at most one existential literal; the only ones that
        # can be unit or empty before any assignment once UR is applied
        self.short: set[int] = set()
        self._next_id = 0
        for clause in clauses:
            self.add_clause(clause)

    def copy(self) -> "PcnfFormula":
        other = PcnfFormula(self.prefix, num_vars=self.num_vars)
        other.clauses = dict(self.clauses)
        other.occurrences = defaultdict(set, {k: set(v) for k, v in self.occurrences.items() if v})
        other.short = set(self.short)
        other._next_id = self._next_id
        return other

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        """Live clauses in ascending id order."""
        return (self.clauses[cid] for cid in sorted(self.clauses))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PcnfFormula):
            return NotImplemented
        return self.prefix == other.prefix and list(self) == list(other)

    def __repr__(self) -> str:
        return f"PcnfFormula({self.prefix!r}, {list(self)!r})"

    @property
    def has_empty_clause(self) -> bool:
        return any(not self.clauses[cid] for cid in self.short)

    def _attach(self, cid: int, clause: Clause) -> None:
        self.clauses[cid] = clause
        for lit in clause:
            self.occurrences[lit].add(cid)
        if sum(1 for lit in clause if not self.prefix.is_universal(lit)) <= 1:
            self.short.add(cid)

    def _detach(self, cid: int) -> Clause:
        try:
            clause = self.clauses.pop(cid)
        except KeyError:
            raise KeyError(f"no live clause with id {cid}") from None
        for lit in clause:
            self.occurrences[lit].discard(cid)
        self.short.discard(cid)
        return clause

    def add_clause(self, literals: Iterable[int]) -> int:
        """Insert a clause in canonical order and return its id."""
        clause = self.prefix.canonical(literals)
        if is_tautology(clause):
            raise ValueError(f"tautological clause {clause}")
        cid = self._next_id
        self._next_id += 1
        self._attach(cid, clause)
        return cid

    def remove_clause(self, cid: int) -> Clause:
        return self._detach(cid)

    def remove_literal(self, cid: int, lit: int) -> Clause:
        clause = self.clauses.get(cid)
        if clause is None:
            raise KeyError(f"no live clause with id {cid}")
        if lit not in clause:
            raise ValueError(f"literal {lit} not in clause {cid}")
        self._detach(cid)
        shrunk = tuple(k for k in clause if k != lit)
        self._attach(cid, shrunk)
        return shrunk

    @contextmanager
    def detached(self, cid: int) -> Iterator[Clause]:
        """Temporarily take a clause out of the store.

        On exit ``holder.clause`` is put back under the same id unless
        ``holder.deleted`` was set.
        """
        clause = self._detach(cid)
        holder = Detached(cid, clause)
        try:
            yield holder
        finally:
            if not holder.deleted:
                self._attach(cid, holder.clause)

    def occurrence_index(self) -> dict[int, set[int]]:
        """A freshly computed index, for consistency checks."""
        index: defaultdict[int, set[int]] = defaultdict(set)
        for cid, clause in self.clauses.items():
            for lit in clause:
                index[lit].add(cid)
        return dict(index)

    def check_invariants(self) -> None:
        for cid, clause in self.clauses.items():
            for lit in clause:
                if abs(lit) not in self.prefix:
                    raise AssertionError(f"clause {cid} is not closed: {lit}")
            keys = [self.prefix.position(lit) for lit in clause]
            if keys != sorted(set(keys)):
                raise AssertionError(f"clause {cid} is not canonical: {clause}")
        live = {k: v for k, v in self.occurrences.items() if v}
        if live != self.occurrence_index():
            raise AssertionError("occurrence index out of sync")

    def restrict_prefix(self, drop: Iterable[int]) -> "PcnfFormula":
        """Return a copy whose prefix no longer binds the given unused variables."""
        drop = set(drop)
        used = {abs(lit) for clause in self for lit in clause}
        if drop & used:
            raise ValueError(f"variables still occur in clauses: {sorted(drop & used)}")
        prefix = Prefix.build(
            (b.quantifier, [v for v in b.variables if v not in drop]) for b in self.prefix.blocks
        )
        return PcnfFormula(prefix, list(self), num_vars=self.num_vars)


@dataclass
class Detached:
    cid: int
    clause: Clause
    deleted: bool = False


def abstract_formula(f: PcnfFormula, i: int) -> PcnfFormula:
    """The formula with blocks ``1..i`` turned into one existential block.

    A following existential block is merged as well, so the result keeps
    alternating quantifiers.  Clauses keep their literal order because the
    merged block preserves the original extended order.
    """
    g = PcnfFormula(f.prefix.abstract(i), num_vars=f.num_vars)
    for clause in f:
        g.add_clause(clause)
    return g
