"""Brute-force QBF semantics for small formulas.

Everything here works on the full assignment tree.  The matrix is tabulated
as a boolean array with one axis per variable (in extended prefix order), and
node labels are obtained by reducing the axes from the innermost variable
outwards: ``any`` for existential and ``all`` for universal variables.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator

import numpy as np

from .formula import PcnfFormula

DEFAULT_MAX_VARS = 24

PreModel = frozenset  # of complete assignments, each a tuple of 0/1 in prefix order


class Verdict(enum.Enum):
    SAT = 1
    UNSAT = 0

    def __str__(self) -> str:
        return f"s cnf {self.value}"


class ResourceLimitError(RuntimeError):
    pass


def _check_cap(f: PcnfFormula, max_vars: int) -> None:
    if len(f.prefix) > max_vars:
        raise ResourceLimitError(f"{len(f.prefix)} variables exceed the oracle cap of {max_vars}")


def clause_table(f: PcnfFormula, clause) -> np.ndarray:
    """Truth value of ``clause`` under every complete assignment.

    The result broadcasts against the full table (size-1 axes for variables
    that do not occur).
    """
    m = len(f.prefix)
    sat = np.zeros((1,) * m, dtype=bool)
    for lit in clause:
        shape = [1] * m
        shape[f.prefix.position(lit)] = 2
        sat = sat | np.array([lit < 0, lit > 0]).reshape(shape)
    return sat


def matrix_table(f: PcnfFormula) -> np.ndarray:
    table = np.ones((2,) * len(f.prefix), dtype=bool)
    for clause in f:
        table &= clause_table(f, clause)
    return table


def game_labels(f: PcnfFormula, max_vars: int = DEFAULT_MAX_VARS) -> list[np.ndarray]:
    """Node labels of the assignment tree, one array per depth.

    ``labels[k]`` has ``k`` axes; ``labels[len(vars)]`` are the leaves.
    """
    _check_cap(f, max_vars)
    order = f.prefix.variables
    labels = [matrix_table(f)]
    for v in reversed(order):
        reduce = np.all if f.prefix.is_universal(v) else np.any
        labels.append(reduce(labels[-1], axis=-1))
    labels.reverse()
    return labels


def evaluate(f: PcnfFormula, max_vars: int = DEFAULT_MAX_VARS) -> Verdict:
    root = game_labels(f, max_vars)[0]
    return Verdict.SAT if bool(root) else Verdict.UNSAT


def evaluate_recursive(f: PcnfFormula, max_vars: int = DEFAULT_MAX_VARS) -> Verdict:
    """Plain recursive game evaluation, used to cross-check :func:`evaluate`."""
    _check_cap(f, max_vars)
    order = f.prefix.variables
    universal = [f.prefix.is_universal(v) for v in order]
    clauses = list(f)
    assignment: dict[int, bool] = {}

    def leaf() -> bool:
        return all(any(assignment[abs(k)] == (k > 0) for k in c) for c in clauses)

    def node(k: int) -> bool:
        if k == len(order):
            return leaf()
        results = []
        for value in (False, True):
            assignment[order[k]] = value
            results.append(node(k + 1))
        del assignment[order[k]]
        return all(results) if universal[k] else any(results)

    return Verdict.SAT if node(0) else Verdict.UNSAT


def sat_equivalent(f1: PcnfFormula, f2: PcnfFormula, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    return evaluate(f1, max_vars) == evaluate(f2, max_vars)


def _check_tiny(f: PcnfFormula, max_universal: int, max_existential: int) -> None:
    n_univ = len(f.prefix.universal_vars)
    n_exist = len(f.prefix) - n_univ
    if n_univ > max_universal or n_exist > max_existential:
        raise ResourceLimitError(
            f"{n_univ} universal / {n_exist} existential variables exceed the caps "
            f"{max_universal} / {max_existential}"
        )


def tree_implies(f: PcnfFormula, clause, max_universal: int = 3, max_existential: int = 4) -> bool:
    """Whether every model of ``f`` is also a model of ``f`` plus ``clause``.

    A leaf lies in some model iff the matrix is true there and, at each
    universal node on its path, the sibling subtree is labelled true.  The
    clause is implied iff no such leaf falsifies it.
    """
    _check_tiny(f, max_universal, max_existential)
    labels = game_labels(f)
    reach = np.ones((), dtype=bool)
    for k, v in enumerate(f.prefix.variables):
        if f.prefix.is_universal(v):
            reach = reach[..., None] & labels[k + 1][..., ::-1]
        else:
            reach = np.repeat(reach[..., None], 2, axis=-1)
    counterexample = labels[-1] & reach & ~clause_table(f, clause)
    return not bool(counterexample.any())


def premodels(f: PcnfFormula) -> Iterator[PreModel]:
    """Enumerate all pre-models of ``f`` as sets of leaves.

    The number of pre-models is doubly exponential; only use this on formulas
    with a handful of variables.
    """
    universal = [f.prefix.is_universal(v) for v in f.prefix.variables]

    def subtrees(k: int) -> list[list[tuple[int, ...]]]:
        if k == len(universal):
            return [[()]]
        below = subtrees(k + 1)
        if universal[k]:
            return [
                [(0, *a) for a in left] + [(1, *b) for b in right]
                for left, right in itertools.product(below, repeat=2)
            ]
        return [[(bit, *a) for a in sub] for bit in (0, 1) for sub in below]

    for leaves in subtrees(0):
        yield frozenset(leaves)


def is_model(table: np.ndarray, premodel: Iterable[tuple[int, ...]]) -> bool:
    return all(bool(table[leaf]) for leaf in premodel)


def tree_implies_by_premodels(f: PcnfFormula, clause) -> bool:
    """Reference version of :func:`tree_implies` that enumerates pre-models."""
    table = matrix_table(f)
    with_clause = table & clause_table(f, clause)
    for premodel in premodels(f):
        if is_model(table, premodel) and not is_model(with_clause, premodel):
            return False
    return True
