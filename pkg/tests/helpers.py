"""Shared builders and frozen tables used across the test modules."""

from fractions import Fraction

from projectivoid import (
    LMatrix,
    LaurentPoly,
    PSeries,
    PrimeField,
    SMatrix,
    ZERO,
    canon,
    exp_add,
)


def srs(p, triples, precision=None):
    """Series from (num, pow, coeff) triples."""
    return PSeries(p, [(canon(n, b, p), Fraction(c)) for n, b, c in triples], precision)


def mono(p, num, pow=0, coeff=1):
    return srs(p, [(num, pow, coeff)])


def random_exponent(rng, p, lo=-6, hi=7, max_pow=2):
    return canon(rng.randrange(lo, hi), rng.randrange(0, max_pow + 1), p)


def random_series(rng, p, max_terms=3):
    pairs = {}
    for _ in range(rng.randrange(0, max_terms + 1)):
        e = random_exponent(rng, p)
        pairs[e] = pairs.get(e, Fraction(0)) + rng.randrange(-4, 5)
    return PSeries(p, pairs)


def random_unit(rng, p, max_tail=4):
    """A series υ^e · (a0 + tail) whose tail coefficients all have strictly
    larger valuation than a0 — a unit of the full ring by construction."""
    e = random_exponent(rng, p, -8, 9)
    v0 = rng.randrange(0, 3)
    pairs = {e: Fraction(rng.choice([1, -1, p + 1, 2 * p + 1])) * Fraction(p) ** v0}
    for _ in range(rng.randrange(0, max_tail)):
        rel = random_exponent(rng, p)
        if rel == ZERO:
            continue
        c = Fraction(rng.choice([1, -1, p + 1])) * Fraction(p) ** (v0 + rng.randrange(1, 4))
        ee = exp_add(e, rel, p)
        pairs[ee] = pairs.get(ee, Fraction(0)) + c
    return PSeries(p, pairs)


def random_multidominant(rng, p):
    """A series with at least two exponents at the minimal valuation."""
    v0 = rng.randrange(0, 3)
    want = rng.randrange(2, 5)
    exps = set()
    while len(exps) < want:
        exps.add(random_exponent(rng, p, -8, 9))
    pairs = {
        e: Fraction(rng.choice([1, -1, p + 1, 2 * p + 1])) * Fraction(p) ** v0
        for e in exps
    }
    for _ in range(rng.randrange(0, 3)):
        e = random_exponent(rng, p, -8, 9)
        if e not in pairs:
            pairs[e] = Fraction(p) ** (v0 + rng.randrange(1, 3))
    return PSeries(p, pairs)


def random_transition(rng, p, m, max_shears=3):
    """Monomial diagonal times unimodular shears: a transition matrix."""
    A = SMatrix.diagonal(p, [random_exponent(rng, p, -4, 5) for _ in range(m)])
    if m >= 2:
        for _ in range(rng.randrange(0, max_shears + 1)):
            i, j = rng.sample(range(m), 2)
            S = SMatrix.shear(p, m, i, j, random_series(rng, p))
            A = A * S if rng.random() < 0.5 else S * A
    return A


def field_elem(rng, field):
    if isinstance(field, PrimeField):
        return rng.randrange(field.p)
    return Fraction(rng.randrange(-3, 4))


def random_laurent(rng, field, lo=-2, hi=3, max_terms=3):
    pairs = {}
    for _ in range(rng.randrange(0, max_terms + 1)):
        pairs[rng.randrange(lo, hi)] = field_elem(rng, field)
    return LaurentPoly(field, pairs)


def random_unimodular(rng, field, m, side=1, factors=3, max_deg=2):
    """Product of shears supported on k[s] (side=+1) or k[1/s] (side=-1)."""
    M = LMatrix.identity(field, m)
    if m < 2:
        return M
    for _ in range(factors):
        i, j = rng.sample(range(m), 2)
        f = LaurentPoly(field, {side * n: field_elem(rng, field) for n in range(max_deg + 1)})
        M = M * LMatrix.shear(field, m, i, j, f)
    return M


# ----------------------------------------------------------------------
# Round-trip corpus: 50 literals exercising the whole grammar (p = 2).

LITERAL_CORPUS = [
    "0",
    "1",
    "-1",
    "7",
    "-7",
    "1/2",
    "-3/8",
    "2/3",
    "v",
    "-1*v",
    "2*v",
    "v^2",
    "v^-1",
    "v^-3",
    "v^(1/2^1)",
    "v^(-1/2^1)",
    "v^(3/2^2)",
    "v^(-3/2^2)",
    "v^(5/2^3)",
    "1 + v",
    "1 - v",
    "2 + 2*v^(1/2^2)",
    "1/2 + v",
    "1 + 2*v^(1/2^1) - v^(-3/2^2)",
    "3/4*v^(1/2^1)",
    "-5/8*v^(7/2^3)",
    "1 + v + v^2 + v^3",
    "1 - v + v^2 - v^3",
    "v^-2 + v^2",
    "v^(-1/2^3) + v^(1/2^3)",
    "5",
    "1 (mod val >= 3)",
    "0 (mod val >= 2)",
    "1 + 2*v + 4*v^2 + 8*v^3 (mod val >= 4)",
    "2 - v (mod val >= 5)",
    "1/4 - 1/2*v (mod val >= 1)",
    "v^(1/2^4) - v^(3/2^4)",
    "100*v^-5",
    "-2*v^(1/2^1) + 3*v - 4*v^(3/2^1) + 5*v^2",
    "17/16 + v^(15/2^4)",
    "s",
    "s^2 - s^-2",
    " 1+2*v ",
    "+1 - v",
    "-v",
    "6/4",
    "v^(2/2^2)",
    "0*v + 1",
    "1 + 0*v^(1/2^1)",
    "2*v^(1/2^1) + 2*v^(1/2^1)",
]


# ----------------------------------------------------------------------
# Golden CLI table: (argv, expected stdout).  Everything here is exact and
# deterministic; expected values were derived by hand from the definitions.

DIAG_HALVES = '{"p": 2, "m": 2, "entries": [["v^(1/2^1)", "0"], ["0", "v^(1/2^1)"]]}'
OFFDIAG = '{"p": 2, "m": 2, "entries": [["1", "v"], ["v", "1"]]}'
NONUNIT_DET = '{"p": 2, "m": 2, "entries": [["1", "0"], ["0", "1 + v"]]}'
MIXED_DIAG = '{"p": 2, "m": 2, "entries": [["v^(-1/2^2)", "0"], ["0", "v"]]}'
ACT_TRIPLE = (
    '{"V": {"p": 2, "m": 2, "entries": [["1", "0"], ["0", "1"]]},'
    ' "A": {"p": 2, "m": 2, "entries": [["v", "0"], ["0", "1"]]},'
    ' "U": {"p": 2, "m": 2, "entries": [["1", "v^(1/2^2)"], ["0", "1"]]}}'
)
SPLIT_UPPER = '{"p": 2, "m": 2, "entries": [["s", "1"], ["0", "s"]]}'
SPLIT_DIAG = '{"p": 2, "m": 2, "entries": [["s^-1", "0"], ["0", "s^3"]]}'
VERIFY_TRIPLE = (
    '{"A": {"p": 2, "m": 2, "entries": [["s", "1"], ["0", "s"]]},'
    ' "U": {"p": 2, "m": 2, "entries": [["1", "0"], ["0", "1"]]},'
    ' "V": {"p": 2, "m": 2, "entries": [["1", "v^-1"], ["0", "1"]]}}'
)

GOLDEN_CLI = [
    (["norm", "--prime", "2", "2 + v^(1/2^1)"], "0\n"),
    (["norm", "--prime", "2", "0"], "inf\n"),
    (["norm", "--prime", "2", "--format", "json", "4*v + 2*v^2"], '{"valuation": 1}\n'),
    (["unit", "--prime", "2", "1 + 2*v^(1/2^1)"], "true\n"),
    (["unit", "--prime", "2", "--ring", "nonneg", "v"], "false\n"),
    (["unit", "--prime", "2", "--format", "json", "1 + v"], '{"result": false}\n'),
    (["invert", "--prime", "2", "--prec", "4", "1 - 2*v"],
     "1 + 2*v + 4*v^2 + 8*v^3 (mod val >= 4)\n"),
    (["invert", "--prime", "2", "--prec", "10", "v^(1/2^1)"], "v^(-1/2^1)\n"),
    (["degree", "--prime", "2", "1 + v"], "1\n"),
    (["degree", "--prime", "2", "2*v + v^(1/2^1) + 4*v^2"], "1/2^1\n"),
    (["reduce", "--prime", "2", "3 + 2*v"], "1\n"),
    (["reduce", "--prime", "2", "1 + v^(1/2^1)"], "1 + v^(1/2^1)\n"),
    (["det", "--prime", "2", OFFDIAG], "1 - v^2\n"),
    (["det", "--prime", "2", "--format", "json", OFFDIAG], '{"series": "1 - v^2"}\n'),
    (["transition", "--prime", "2", DIAG_HALVES], "true\n"),
    (["transition", "--prime", "2", NONUNIT_DET], "false\n"),
    (["bundle-degree", "--prime", "2", DIAG_HALVES], "1\n"),
    (["bundle-degree", "--prime", "2", MIXED_DIAG], "3/2^2\n"),
    (["act", "--prime", "2", ACT_TRIPLE],
     '{"p": 2, "m": 2, "entries": [["v", "v^(5/2^2)"], ["0", "1"]]}\n'),
    (["family", "--prime", "2", "--max-pow", "0"],
     '{"p": 2, "m": 2, "entries": [["1", "0"], ["0", "v"]]}\n'
     '{"p": 2, "m": 2, "entries": [["v", "0"], ["0", "1"]]}\n'),
    (["enumerate", "--prime", "2", "--count", "6"], "0\n1\n1/2^1\n2\n1/2^2\n3\n"),
    (["enumerate", "--count", "5", "--order", "calkin-wilf"], "1\n1/2\n2\n1/3\n3/2\n"),
    (["enumerate", "--prime", "2", "--count", "8", "--order", "calkin-wilf", "--filter"],
     "1\n1/2^1\n2\n3/2^1\n3\n1/2^2\n5/2^1\n3/2^2\n"),
    (["enumerate", "--prime", "2", "--count", "4", "--format", "json"],
     '{"values": ["0", "1", "1/2^1", "2"]}\n'),
    (["split", SPLIT_UPPER], "(1, 1)\n"),
    (["split", SPLIT_DIAG], "(-1, 3)\n"),
    (["split", "--field", "rational", '{"m": 1, "entries": [["v^2"]]}'], "(2)\n"),
    (["verify-split", VERIFY_TRIPLE], "true\n"),
]
