from qbfredux.formula import PcnfFormula, Prefix, Quantifier


def qbf(prefix: str, clauses=()) -> PcnfFormula:
    """Build a formula from a compact prefix such as ``"e1 a2 e3,4"``."""
    blocks = []
    for token in prefix.split():
        q = Quantifier(token[0])
        blocks.append((q, [int(v) for v in token[1:].split(",")]))
    return PcnfFormula(Prefix.build(blocks), clauses)


# exists x1 forall u exists x2, with x1 = 1, u = 2, x2 = 3
EX1_PREFIX = "e1 a2 e3"
EX1_C = (1, 2, 3)
EX1_D = (-1, -2, -3)

# forall u1 exists x3 forall u2 exists x4 with u1 = 1, x3 = 2, u2 = 3, x4 = 4
EX_QAT_PREFIX = "a1 e2 a3 e4"
EX_QAT_CLAUSES = [(1, -2), (1, -2, 4), (-3, -4)]


def fuzz_corpus(count=500, seed=2024):
    """Seeded random PCNFs with 4..14 variables over 2..4 blocks."""
    import random

    from qbfredux.generators import RandomQbfConfig, gen_random_qbf

    rng = random.Random(seed)
    for _ in range(count):
        v = rng.randint(4, 14)
        cfg = RandomQbfConfig(
            num_vars=v,
            num_blocks=rng.randint(2, 4),
            num_clauses=rng.randint(v // 2, 3 * v // 2),
            clause_width=(3, min(5, v)),
            seed=rng.getrandbits(64),
            outer_universal=rng.random() < 0.5,
        )
        yield gen_random_qbf(cfg)


def tiny_corpus(count=1500, seed=7):
    """Random PCNFs with at most 3 universal and 4 existential variables."""
    import random

    from qbfredux.generators import RandomQbfConfig, gen_random_qbf

    rng = random.Random(seed)
    produced = 0
    while produced < count:
        v = rng.randint(2, 7)
        cfg = RandomQbfConfig(
            num_vars=v,
            num_blocks=rng.randint(2, min(4, v)),
            num_clauses=rng.randint(1, 2 * v),
            clause_width=(1, min(4, v)),
            seed=rng.getrandbits(64),
            outer_universal=rng.random() < 0.5,
        )
        f = gen_random_qbf(cfg)
        n_univ = len(f.prefix.universal_vars)
        if n_univ > 3 or len(f.prefix) - n_univ > 4:
            continue
        produced += 1
        yield f


def small_formulas(max_vars=6, max_blocks=4, outer=None):
    """Hypothesis strategy for small random PCNFs."""
    from hypothesis import strategies as st

    from qbfredux.generators import RandomQbfConfig, gen_random_qbf

    return st.builds(
        lambda v, b, c, seed, outer_universal: gen_random_qbf(
            RandomQbfConfig(v, min(b, v), c, (1, min(3, v)), seed, outer_universal)
        ),
        st.integers(1, max_vars),
        st.integers(1, max_blocks),
        st.integers(0, 2 * max_vars),
        st.integers(0, 2**32),
        st.booleans() if outer is None else outer,
    )


def clauses_over(f, data, max_size=4):
    """Draw a non-tautological clause over the variables of ``f``."""
    from hypothesis import strategies as st

    chosen = data.draw(st.lists(st.sampled_from(f.prefix.variables), unique=True, max_size=max_size))
    return f.prefix.canonical(v if data.draw(st.booleans()) else -v for v in chosen)
