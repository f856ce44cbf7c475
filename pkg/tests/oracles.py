"""Independent brute-force oracles for the test suite.

Everything here works directly on raw structure-constant tensors
(nested lists of Fractions) with straightforward nested loops, or hands
the linear algebra to sympy.  Nothing imports the package's own linear
algebra or derivation machinery, so agreement between the two routes is
meaningful.
"""

from fractions import Fraction
from itertools import product

import sympy


def tensors_of(algebra, module):
    """Raw (mul, left, right) tensors of an Algebra / Bimodule pair."""
    return algebra.mul_tensor, module.left, module.right


def mul_vec(mul, x, y):
    n = len(mul)
    out = [Fraction(0)] * len(mul[0][0]) if n else []
    for i in range(n):
        for j in range(n):
            c = x[i] * y[j]
            if c:
                for k in range(len(mul[i][j])):
                    out[k] += c * mul[i][j][k]
    return out


def left_act(left, a, u):
    m, n = len(left), len(u)
    out = [Fraction(0)] * n
    for i in range(m):
        for j in range(n):
            c = a[i] * u[j]
            if c:
                for k in range(n):
                    out[k] += c * left[i][j][k]
    return out


def right_act(right, u, a):
    n, m = len(u), len(a)
    out = [Fraction(0)] * n
    for j in range(n):
        for i in range(m):
            c = u[j] * a[i]
            if c:
                for k in range(n):
                    out[k] += c * right[j][i][k]
    return out


def apply_matrix(d, v):
    return [sum((row[s] * v[s] for s in range(len(v))), Fraction(0)) for row in d]


def leibniz_holds(mul, left, right, d):
    """Does the map with matrix d satisfy D(ab) = aD(b) + D(a)b?

    d is an (n x m) nested list for a map A -> U, where m = dim A and
    n = dim U.  Checked on every basis pair by direct evaluation.
    """
    m = len(mul)
    for i, j in product(range(m), repeat=2):
        ei = [Fraction(1 if s == i else 0) for s in range(m)]
        ej = [Fraction(1 if s == j else 0) for s in range(m)]
        lhs = apply_matrix(d, mul[i][j])
        di = apply_matrix(d, ei)
        dj = apply_matrix(d, ej)
        rhs = [a + b for a, b in zip(left_act(left, ei, dj), right_act(right, di, ej))]
        if lhs != rhs:
            return False
    return True


def _leibniz_sympy_matrix(mul, left, right):
    """The Leibniz system as a sympy Matrix (rows: (i,j,k), cols: d[t][s])."""
    m = len(mul)
    n = len(left[0]) if m else 0
    rows = []
    for i in range(m):
        for j in range(m):
            for k in range(n):
                row = [sympy.Rational(0)] * (m * n)
                for s in range(m):
                    row[k * m + s] += sympy.Rational(mul[i][j][s])
                for t in range(n):
                    row[t * m + j] -= sympy.Rational(left[i][t][k])
                    row[t * m + i] -= sympy.Rational(right[t][j][k])
                rows.append(row)
    return sympy.Matrix(rows) if rows else sympy.zeros(0, m * n)


def derivation_dim(mul, left, right):
    """dim Der(A,U) via sympy's nullspace."""
    mat = _leibniz_sympy_matrix(mul, left, right)
    return len(mat.nullspace()) if mat.cols else 0


def inner_dim(mul, left, right):
    """dim of the span of the commutator maps id_{u_j}, via sympy rank."""
    m = len(mul)
    n = len(left[0]) if m else 0
    cols = []
    for j in range(n):
        uj = [Fraction(1 if t == j else 0) for t in range(n)]
        flat = []
        for k in range(n):
            for i in range(m):
                ei = [Fraction(1 if s == i else 0) for s in range(m)]
                val = left_act(left, ei, uj)[k] - right_act(right, uj, ei)[k]
                flat.append(sympy.Rational(val))
        cols.append(flat)
    if not cols:
        return 0
    return sympy.Matrix(cols).T.rank()


def largest_nilpotent_ideal_dim(mul, max_seed_size=2):
    """Exhaustive small-seed search for the largest nilpotent ideal.

    Seeds are all {-1,0,1} coordinate vectors (normalized to a leading
    1) taken one or two at a time; each seed set is closed up to the
    two-sided ideal it generates, checked for nilpotency, and all
    nilpotent ideals found are summed.  Returns the dimension of the
    verified nilpotent sum.
    """
    m = len(mul)

    def span_dim(vectors):
        # plain fraction elimination, local to the oracle
        basis = []  # rows with pivot positions, kept reduced
        for v in vectors:
            v = [Fraction(x) for x in v]
            for pivot, row in basis:
                if v[pivot]:
                    f = v[pivot]
                    v = [a - f * b for a, b in zip(v, row)]
            p = next((i for i, a in enumerate(v) if a), None)
            if p is not None:
                inv = 1 / v[p]
                basis.append((p, [a * inv for a in v]))
        basis.sort()
        return len(basis), [row for _, row in basis]

    def close_ideal(seed):
        _, basis = span_dim(seed)
        while True:
            new = list(basis)
            for v in basis:
                vf = [Fraction(x) for x in v]
                for i in range(m):
                    ei = [Fraction(1 if s == i else 0) for s in range(m)]
                    new.append(mul_vec(mul, ei, vf))
                    new.append(mul_vec(mul, vf, ei))
            d, nb = span_dim(new)
            if d == len(basis):
                return basis
            basis = nb

    def is_nilpotent(basis):
        power = basis
        for _ in range(m + 1):
            if not power:
                return True
            prods = []
            for v in power:
                for w in basis:
                    prods.append(
                        mul_vec(mul, [Fraction(x) for x in v], [Fraction(x) for x in w])
                    )
            _, power = span_dim([p for p in prods if any(p)])
        return not power

    pool = []
    for coords in product((-1, 0, 1), repeat=m):
        if all(c == 0 for c in coords):
            continue
        first = next(c for c in coords if c != 0)
        if first == -1:
            continue  # scalar multiple of a vector already in the pool
        pool.append([Fraction(c) for c in coords])

    seeds = [[v] for v in pool]
    if max_seed_size >= 2:
        seeds += [[pool[i], pool[j]] for i in range(len(pool)) for j in range(i)]

    found = []
    for seed in seeds:
        ideal = close_ideal(seed)
        if is_nilpotent(ideal):
            found.extend(ideal)
    total = close_ideal(found) if found else []
    if total and not is_nilpotent(total):
        raise AssertionError("sum of nilpotent ideals failed the nilpotency check")
    return len(total)
