"""Division-free determinants over any commutative ring.

Both routines only use ring addition, negation and multiplication, so they
apply verbatim to series with fractional exponents and to Laurent
polynomials.  Leibniz expansion is preferred for small sizes; the Berkowitz
recursion keeps larger sizes polynomial without ever dividing.
"""

from __future__ import annotations

from itertools import permutations


def _parity(perm) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return inversions % 2


def leibniz_det(rows, one):
    """Sum over permutations; fine up to 5x5 or so."""
    n = len(rows)
    total = None
    for perm in permutations(range(n)):
        prod = one
        for i, j in enumerate(perm):
            prod = prod * rows[i][j]
        if _parity(perm):
            prod = -prod
        total = prod if total is None else total + prod
    return total


def _dot(u, v):
    acc = None
    for a, b in zip(u, v):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def _matvec(rows, v):
    return [_dot(r, v) for r in rows]


def _berkowitz_vector(rows, zero, one):
    # Coefficients of det(t*I - A), highest power first.
    n = len(rows)
    a = rows[0][0]
    if n == 1:
        return [one, -a]
    r_vec = rows[0][1:]
    c_vec = [r[0] for r in rows[1:]]
    body = [r[1:] for r in rows[1:]]
    items = [one, -a]
    t = c_vec
    for _ in range(n - 1):
        items.append(-_dot(r_vec, t))
        t = _matvec(body, t)
    prev = _berkowitz_vector(body, zero, one)
    out = []
    for i in range(n + 1):
        s = zero
        for j, pj in enumerate(prev):
            k = i - j
            if 0 <= k < len(items):
                s = s + items[k] * pj
        out.append(s)
    return out


def berkowitz_det(rows, zero, one):
    n = len(rows)
    vec = _berkowitz_vector(rows, zero, one)
    constant = vec[-1]
    # det(A) = (-1)^n * [constant coefficient of det(t*I - A)]
    return constant if n % 2 == 0 else -constant
