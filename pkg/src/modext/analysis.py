"""Structural predicates: center, Jacobson radical, simplicity, idempotents.

The radical uses the characteristic-zero trace criterion on the
unitization: x is in rad(A) iff trace(L_{xy}) = 0 for every y, where L
is left multiplication on A with a unit adjoined.  The computed radical
is re-verified to be a nilpotent two-sided ideal.

Simplicity (equivalently primeness, for finite-dimensional algebras)
is decided through the center: a semisimple algebra is simple iff the
minimal polynomial of a generic central element has degree dim Z and is
irreducible over Q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import sympy

from .algebra import Algebra, Bimodule, Element, LinearMap
from .extension import ideal_check
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    is_zero_vec,
    nullspace,
    rank,
    solve,
    unit_vec,
    vec,
    zero_vec,
)


@dataclass
class RadicalReport:
    radical: Subspace
    is_semisimple: bool
    note: str = ""


@dataclass
class Polynomial:
    """Rational polynomial, coefficients lowest degree first."""

    coefficients: List[Fraction]

    def __post_init__(self):
        self.coefficients = [Fraction(c) for c in self.coefficients]
        while self.coefficients and self.coefficients[-1] == 0:
            self.coefficients.pop()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else -1

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.coefficients == other.coefficients
        )

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = "t" if k == 1 else "t^%d" % k
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append("-" + power)
            else:
                terms.append("%s*%s" % (c, power))
        return " + ".join(terms).replace("+ -", "- ")


@dataclass
class SimplePrimeReport:
    simple: Optional[bool]   # None means indeterminate after all retries
    prime: Optional[bool]
    evidence: dict = field(default_factory=dict)


def center(a: Algebra) -> Subspace:
    """{z : z e_i = e_i z for all i}, exactly."""
    n = a.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append(
                [a.mul_tensor[s][i][k] - a.mul_tensor[i][s][k] for s in range(n)]
            )
    if not rows:
        return Subspace.full(0)
    return nullspace(Matrix.from_rows(rows))


def unitization(a: Algebra) -> Algebra:
    """A with a formal unit adjoined at coordinate 0."""
    n = a.dim
    mul = [[[Fraction(0)] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    mul[0][0][0] = Fraction(1)
    for i in range(n):
        mul[0][i + 1][i + 1] = Fraction(1)
        mul[i + 1][0][i + 1] = Fraction(1)
        for j in range(n):
            for k in range(n):
                mul[i + 1][j + 1][k + 1] = a.mul_tensor[i][j][k]
    return Algebra(mul, basis_names=["1"] + list(a.basis_names))


def _trace_of_left_mul(alg: Algebra) -> Vector:
    """t_s = trace of left multiplication by basis element s."""
    n = alg.dim
    return [
        sum((alg.mul_tensor[s][j][j] for j in range(n)), Fraction(0))
        for s in range(n)
    ]


def subspace_product(a: Algebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of {v w : v in s, w in t}."""
    vectors = [a.mul_vec(v, w) for v in s.basis for w in t.basis]
    return Subspace.from_vectors(a.dim, vectors)


def is_nilpotent_subspace(a: Algebra, s: Subspace) -> bool:
    """Does some power of the subspace (under products) vanish?

    Checked up to dim + 1 steps; for a subalgebra this settles
    nilpotency in finite dimension.
    """
    power = s
    for _ in range(a.dim + 1):
        if power.dim == 0:
            return True
        power = subspace_product(a, power, s)
    return power.dim == 0


def radical(a: Algebra) -> RadicalReport:
    """Jacobson radical via the trace criterion, with re-verification."""
    n = a.dim
    tilde = unitization(a)
    traces = _trace_of_left_mul(tilde)
    rows = []
    for j in range(tilde.dim):
        # condition on x in A (coordinates 1..n of the unitization):
        # trace(L_{x f_j}) = 0
        row = []
        for i in range(n):
            prod = tilde.mul_basis(i + 1, j)
            row.append(sum((p * t for p, t in zip(prod, traces)), Fraction(0)))
        rows.append(row)
    rad = nullspace(Matrix.from_rows(rows))
    if not ideal_check(a, rad).passed:
        raise AssertionError("computed radical is not a two-sided ideal")
    if not is_nilpotent_subspace(a, rad):
        raise AssertionError("computed radical is not nilpotent")
    return RadicalReport(
        radical=rad,
        is_semisimple=rad.dim == 0,
        note="trace criterion on the unitization; verified nilpotent ideal",
    )


def min_poly(a: Algebra, x) -> Polynomial:
    """Monic minimal polynomial of x, from the first power dependence.

    Powers start at the algebra's unit; when A has none, a formal unit
    is adjoined first.
    """
    coords = x.coords if isinstance(x, Element) else vec(x)
    e = a.unit()
    if e is None:
        alg = unitization(a)
        coords = [Fraction(0)] + list(coords)
        e = unit_vec(alg.dim, 0)
    else:
        alg = a
        coords = list(coords)
    powers = [e]
    while True:
        m = Matrix.from_rows(powers).transpose()
        nxt = alg.mul_vec(powers[-1], coords)
        dep = solve(m, nxt)
        if dep is not None:
            k = len(powers)
            coeffs = [-c for c in dep] + [Fraction(1)]
            return Polynomial(coeffs)
        powers.append(nxt)
        if len(powers) > alg.dim + 1:
            raise AssertionError("no power dependence found below the dimension")


def poly_eval_in_algebra(a: Algebra, poly: Polynomial, x) -> Vector:
    """Horner evaluation of poly at x (in the unitization if needed)."""
    coords = x.coords if isinstance(x, Element) else vec(x)
    e = a.unit()
    if e is None:
        alg = unitization(a)
        coords = [Fraction(0)] + list(coords)
        e = unit_vec(alg.dim, 0)
    else:
        alg = a
        coords = list(coords)
    acc = zero_vec(alg.dim)
    for c in reversed(poly.coefficients):
        acc = alg.mul_vec(acc, coords)
        if c != 0:
            acc = [v + c * ev for v, ev in zip(acc, e)]
    return acc


def _factor_over_q(poly: Polynomial):
    """Irreducible factorization over Q via sympy; [(coeffs, mult), ...]."""
    t = sympy.Symbol("t")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * t**k
        for k, c in enumerate(poly.coefficients)
    )
    _, factors = sympy.Poly(expr, t, domain="QQ").factor_list()
    out = []
    for f, mult in factors:
        coeffs = [Fraction(str(c)) for c in reversed(f.all_coeffs())]
        out.append((Polynomial(coeffs), int(mult)))
    return out


def is_idempotent(a: Algebra, p) -> bool:
    coords = p.coords if isinstance(p, Element) else vec(p)
    return a.mul_vec(coords, coords) == list(coords)


def is_nontrivial_idempotent(a: Algebra, p) -> bool:
    coords = p.coords if isinstance(p, Element) else vec(p)
    return is_idempotent(a, coords) and not is_zero_vec(coords)


def is_simple_prime(a: Algebra, seed: int = 0, retries: int = 8) -> SimplePrimeReport:
    """Simplicity / primeness of a finite-dimensional algebra.

    A finite-dimensional algebra is prime iff it is simple, and simple
    iff it is semisimple with a field for a center.  The center is
    probed with seeded random elements until one has a minimal
    polynomial of full degree dim Z; simplicity is then irreducibility
    of that polynomial over Q.  If every retry is degenerate the result
    is indeterminate (simple=None) with the attempts recorded.
    """
    rad = radical(a)
    if not rad.is_semisimple:
        return SimplePrimeReport(
            simple=False,
            prime=False,
            evidence={"reason": "radical is nonzero", "radical_dim": rad.radical.dim},
        )
    z = center(a)
    rng = random.Random(seed)
    attempts = []
    for _ in range(retries):
        weights = [rng.randint(-9, 9) for _ in range(z.dim)]
        elem = zero_vec(a.dim)
        for w, b in zip(weights, z.basis):
            elem = [x + w * y for x, y in zip(elem, b)]
        poly = min_poly(a, elem)
        attempts.append(str(poly))
        if poly.degree == z.dim:
            factors = _factor_over_q(poly)
            simple = len(factors) == 1 and factors[0][1] == 1
            return SimplePrimeReport(
                simple=simple,
                prime=simple,
                evidence={
                    "center_dim": z.dim,
                    "min_poly": str(poly),
                    "factors": [(str(f), m) for f, m in factors],
                },
            )
    return SimplePrimeReport(
        simple=None,
        prime=None,
        evidence={"reason": "all retries degenerate", "attempts": attempts},
    )


def find_surjective_left_hom(a: Algebra, u: Bimodule) -> Optional[LinearMap]:
    """A surjective left A-module homomorphism A -> U, if the search finds one.

    The left-hom constraints are linear in the matrix entries; the
    solution space is scanned with a deterministic weight schedule for a
    full-rank member.  None means "not found", not "nonexistent".
    """
    m, n = a.dim, u.dim
    if n > m:
        return None
    rows = []
    for i in range(m):
        for j in range(m):
            c_ij = a.mul_tensor[i][j]
            for k in range(n):
                row = zero_vec(m * n)
                for s in range(m):
                    row[k * m + s] += c_ij[s]
                for t in range(n):
                    row[t * m + j] -= u.left[i][t][k]
                rows.append(row)
    sol = nullspace(Matrix.from_rows(rows)) if rows else Subspace.full(m * n)
    if sol.dim == 0:
        return None
    for k in range(a.dim + 1):
        weights = [Fraction((i + 1) ** k) for i in range(sol.dim)]
        flat = zero_vec(m * n)
        for w, b in zip(weights, sol.basis):
            flat = [x + w * y for x, y in zip(flat, b)]
        candidate = Matrix.unflatten(n, m, flat)
        if rank(candidate) == n:
            return LinearMap(a, u, candidate)
    return None
