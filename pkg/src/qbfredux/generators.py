"""Formula families that separate QRAT from QRAT+, and random PCNFs.

Numbering of the families (gadget ``i`` counts from 0, ids are dense and
follow prefix order inside each gadget):

``phi_c(n)``
    x[4i+1] = 6i+1, x[4i+2] = 6i+2, u[2i+1] = 6i+3,
    x[4i+3] = 6i+4, u[2i+2] = 6i+5, x[4i+4] = 6i+6
``phi_l(n)``
    u[3i+1] = 6i+1, u[3i+2] = 6i+2, x[3i+1] = 6i+3,
    x[3i+2] = 6i+4, u[3i+3] = 6i+5, x[3i+3] = 6i+6
``quparity(n)`` / ``lqparity(n)``
    x[k] = k for k = 1..n, z1 (or z) = n+1, z2 = n+2, t[k] = n+k+1 for k = 2..n
    (``lqparity`` leaves id n+2 unused)
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import PcnfFormula, Prefix, Quantifier

E, A = Quantifier.EXISTS, Quantifier.FORALL


def _require(n: int, low: int) -> None:
    if n < low:
        raise ValueError(f"n must be at least {low}, got {n}")


def gen_phi_c(n: int) -> PcnfFormula:
    """Clause family where QRATE+ deletes every clause and QRATE none."""
    _require(n, 1)
    blocks: list[list[int]] = [[], [], [], [], []]
    clauses = []
    for i in range(n):
        b = 6 * i
        x1, x2, u1, x3, u2, x4 = b + 1, b + 2, b + 3, b + 4, b + 5, b + 6
        blocks[0] += [x1, x2]
        blocks[1].append(u1)
        blocks[2].append(x3)
        blocks[3].append(u2)
        blocks[4].append(x4)
        clauses += [
            (x1, u1, -x3),
            (x2, -u1, x3),
            (-x1, -u1, -x3),
            (-x2, u1, x3),
            (u1, -x3, x4),
            (-u2, -x4),
            (-x1, u2, -x4),
        ]
    prefix = Prefix.build(zip((E, A, E, A, E), blocks))
    return PcnfFormula(prefix, clauses)


def gen_phi_l(n: int) -> PcnfFormula:
    """Family where QRATU+ removes the whole outermost universal block and QRATU nothing."""
    _require(n, 1)
    blocks: list[list[int]] = [[], [], [], []]
    clauses = []
    for i in range(n):
        b = 6 * i
        u1, u2, x1, x2, u3, x3 = b + 1, b + 2, b + 3, b + 4, b + 5, b + 6
        blocks[0] += [u1, u2]
        blocks[1] += [x1, x2]
        blocks[2].append(u3)
        blocks[3].append(x3)
        clauses += [
            (-u2, -x1, -x2),
            (-u1, -x1, x2),
            (u1, x1, -x2),
            (u2, x1, x2),
            (-x1, -x2, x3),
            (u3, -x3),
            (-x1, x2, -x3),
            (-u3, x3),
        ]
    prefix = Prefix.build(zip((A, E, A, E), blocks))
    return PcnfFormula(prefix, clauses)


def _parity_clauses(n: int, pos: tuple[int, ...], neg: tuple[int, ...]) -> list[tuple[int, ...]]:
    def t(k: int) -> int:
        return n + k + 1

    x = list(range(n + 1))  # x[k] = k
    clauses = [(*pos, t(n)), (*neg, -t(n))]
    for i in range(2, n + 1):
        prev = x[1] if i == 2 else t(i - 1)
        for zs in (pos, neg):
            clauses += [
                (-prev, -x[i], *zs, -t(i)),
                (prev, x[i], *zs, -t(i)),
                (-prev, x[i], *zs, t(i)),
                (prev, -x[i], *zs, t(i)),
            ]
    return clauses


def gen_quparity(n: int) -> PcnfFormula:
    _require(n, 2)
    z1, z2 = n + 1, n + 2
    prefix = Prefix.build(
        [(E, range(1, n + 1)), (A, [z1, z2]), (E, range(n + 3, 2 * n + 2))]
    )
    return PcnfFormula(prefix, _parity_clauses(n, (z1, z2), (-z1, -z2)))


def gen_lqparity(n: int) -> PcnfFormula:
    """QUParity with the pair ``z1, z2`` replaced by the single variable ``z``."""
    _require(n, 2)
    z = n + 1
    prefix = Prefix.build([(E, range(1, n + 1)), (A, [z]), (E, range(n + 3, 2 * n + 2))])
    return PcnfFormula(prefix, _parity_clauses(n, (z,), (-z,)), num_vars=2 * n + 1)


@dataclass(frozen=True)
class RandomQbfConfig:
    num_vars: int
    num_blocks: int
    num_clauses: int
    clause_width: tuple[int, int] = (1, 3)
    seed: int = 0
    outer_universal: bool = False

    def __post_init__(self):
        lo, hi = self.clause_width
        if self.num_vars < 1 or self.num_blocks < 1 or self.num_clauses < 0:
            raise ValueError("num_vars and num_blocks must be positive, num_clauses nonnegative")
        if lo < 1 or hi < lo:
            raise ValueError(f"invalid clause width range {self.clause_width}")
        if hi > self.num_vars:
            raise ValueError(f"clause width {hi} exceeds the number of variables {self.num_vars}")


def gen_random_qbf(cfg: RandomQbfConfig) -> PcnfFormula:
    """Random closed PCNF; variable ``v`` goes to block ``(v - 1) % num_blocks``."""
    rng = random.Random(cfg.seed)
    first = A if cfg.outer_universal else E
    blocks = [
        (first if b % 2 == 0 else (E if first is A else A),
         range(b + 1, cfg.num_vars + 1, cfg.num_blocks))
        for b in range(cfg.num_blocks)
    ]
    clauses = []
    for _ in range(cfg.num_clauses):
        width = rng.randint(*cfg.clause_width)
        variables = rng.sample(range(1, cfg.num_vars + 1), width)
        clauses.append([v if rng.random() < 0.5 else -v for v in variables])
    return PcnfFormula(Prefix.build(blocks), clauses, num_vars=cfg.num_vars)
