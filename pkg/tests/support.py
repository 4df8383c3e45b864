"""Helpers shared across test modules."""

from ringrsa import determinant, make_ring

# Rings the identity batches run over: two quadratics, a cubic, two
# quartics from cyclotomic minimal polynomials.  Keys are short labels
# for parametrized test ids.
TEST_RINGS = {
    "sqrt2": make_ring((2, 0)),
    "isqrt5": make_ring((-5, 0)),
    "cubic": make_ring((1, 1, 0)),
    "zeta5": make_ring((-1, -1, -1, -1)),
    "zeta8": make_ring((-1, 0, 0, 0)),
}


def rand_coeffs(rng, n, bound):
    return tuple(rng.randrange(-bound, bound + 1) for _ in range(n))


def rand_element(rng, ctx, bound=9):
    return ctx.element(rand_coeffs(rng, ctx.degree, bound))


def rand_nonzero_element(rng, ctx, bound=9):
    while True:
        coeffs = rand_coeffs(rng, ctx.degree, bound)
        if any(coeffs):
            return ctx.element(coeffs)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def mat_pow(a, k):
    n = len(a)
    out = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def rand_unimodular(rng, n, steps=None):
    """Determinant +-1 integer matrix built from elementary column ops.

    Multipliers stay small so products with 10**6-entry matrices do not
    blow up coefficient sizes.
    """
    cols = [[int(i == j) for i in range(n)] for j in range(n)]
    if steps is None:
        steps = 4 * n
    for _ in range(steps):
        op = rng.randrange(3)
        j = rng.randrange(n)
        k = rng.randrange(n)
        if op == 0 and j != k:
            m = rng.choice((-3, -2, -1, 1, 2, 3))
            cols[j] = [a + m * b for a, b in zip(cols[j], cols[k])]
        elif op == 1:
            cols[j], cols[k] = cols[k], cols[j]
        else:
            cols[j] = [-a for a in cols[j]]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def rand_nonsingular(rng, n, bound):
    while True:
        rows = tuple(
            tuple(rng.randrange(-bound, bound + 1) for _ in range(n))
            for _ in range(n)
        )
        if determinant(rows) != 0:
            return rows
