"""Trivial (module) extension algebras T(A,U) and quotient bimodules.

T(A,U) is A + U with the product (a,u)(b,v) = (ab, av + ub); the copy of
U becomes a square-zero two-sided ideal.  Coordinates on the total
algebra are the A coordinates followed by the U coordinates, so the
coordinate l1 norm splits as ||(a,u)|| = ||a|| + ||u|| by construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from .algebra import Algebra, Bimodule, LinearMap, is_module_hom
from .linalg import Matrix, Subspace, Vector, unit_vec, zero_vec
from .reports import ConditionReport, HypothesisError


class ModuleExtension:
    """The algebra T(A,U), with embeddings and projections for both legs."""

    def __init__(self, base: Algebra, module: Bimodule):
        if module.algebra is not base:
            raise ValueError("module is not over the given base algebra")
        self.base = base
        self.module = module
        m, n = base.dim, module.dim
        d = m + n
        mul = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    mul[i][j][k] = base.mul_tensor[i][j][k]
        for i in range(m):
            for j in range(n):
                for k in range(n):
                    # (e_i, 0)(0, u_j) = (0, e_i u_j)
                    mul[i][m + j][m + k] = module.left[i][j][k]
                    # (0, u_j)(e_i, 0) = (0, u_j e_i)
                    mul[m + j][i][m + k] = module.right[j][i][k]
        names = ["a:%s" % s for s in base.basis_names] + [
            "u:%s" % s for s in module.basis_names
        ]
        # associativity is re-verified by the Algebra constructor
        self.total = Algebra(mul, basis_names=names)

        embed_a = Matrix.zeros(d, m)
        embed_u = Matrix.zeros(d, n)
        proj_a = Matrix.zeros(m, d)
        proj_u = Matrix.zeros(n, d)
        for i in range(m):
            embed_a.data[i][i] = Fraction(1)
            proj_a.data[i][i] = Fraction(1)
        for j in range(n):
            embed_u.data[m + j][j] = Fraction(1)
            proj_u.data[j][m + j] = Fraction(1)
        self.embed_A = LinearMap(base, self.total, embed_a)
        self.embed_U = LinearMap(module, self.total, embed_u)
        self.project_A = LinearMap(self.total, base, proj_a)
        self.project_U = LinearMap(self.total, module, proj_u)

    @property
    def base_dim(self) -> int:
        return self.base.dim

    @property
    def module_dim(self) -> int:
        return self.module.dim

    def pair(self, a: Vector, u: Vector) -> Vector:
        """Total coordinates of (a, u)."""
        if len(a) != self.base_dim or len(u) != self.module_dim:
            raise ValueError("component lengths do not match")
        return list(a) + list(u)

    def split(self, x: Vector) -> Tuple[Vector, Vector]:
        m = self.base_dim
        return list(x[:m]), list(x[m:])

    def __repr__(self):
        return "ModuleExtension(A dim=%d, U dim=%d)" % (
            self.base_dim,
            self.module_dim,
        )


def trivial_extension(a: Algebra, u: Bimodule) -> ModuleExtension:
    """Build T(A,U) from a validated algebra and bimodule."""
    return ModuleExtension(a, u)


def norm_l1(coords: Vector) -> Fraction:
    """Coordinate l1 norm; on T(A,U) it equals ||a|| + ||u|| exactly."""
    return sum((abs(x) for x in coords), Fraction(0))


def submultiplicativity_constant(a: Algebra) -> Fraction:
    """Least C with ||xy|| <= C ||x|| ||y|| for the coordinate l1 norm.

    C = max over basis pairs (i,j) of sum_k |c[i][j][k]|; the maximum is
    attained at some basis pair, so the bound is sharp.
    """
    best = Fraction(0)
    for i in range(a.dim):
        for j in range(a.dim):
            s = sum((abs(x) for x in a.mul_tensor[i][j]), Fraction(0))
            if s > best:
                best = s
    return best


def ideal_check(a: Algebra, s: Subspace) -> ConditionReport:
    """Is the subspace a two-sided ideal?  A.s and s.A checked on basis
    generators, with the escaping product as witness."""
    if s.ambient_dim != a.dim:
        raise ValueError("subspace ambient dimension does not match algebra")
    rep = ConditionReport("two-sided ideal")
    for name, left in (("A.s in s", True), ("s.A in s", False)):
        ok = True
        witness = None
        for i in range(a.dim):
            ei = unit_vec(a.dim, i)
            for w in s.basis:
                prod = a.mul_vec(ei, w) if left else a.mul_vec(w, ei)
                if not s.contains_vector(prod):
                    ok = False
                    witness = ((i,), w, prod)
                    break
            if not ok:
                break
        rep.add(name, ok, witness=witness)
    return rep


def quotient_algebra(a: Algebra, ideal: Subspace) -> Tuple[Algebra, Matrix]:
    """The algebra A/I with its projection matrix.

    Same coordinate choice as quotient_bimodule: cosets of the standard
    basis vectors at the non-pivot columns of I's echelon basis.
    """
    rep = ideal_check(a, ideal)
    if not rep.passed:
        raise HypothesisError("subspace is not a two-sided ideal", rep)
    m = a.dim
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in ideal.basis]
    complement = [j for j in range(m) if j not in pivots]

    def project(v: Vector) -> Vector:
        red = ideal.reduce(v)
        return [red[j] for j in complement]

    mul = [
        [project(a.mul_vec(unit_vec(m, c), unit_vec(m, d))) for d in complement]
        for c in complement
    ]
    names = [a.basis_names[c] + "+I" for c in complement]
    quotient = Algebra(mul, basis_names=names)
    proj = Matrix.from_rows([project(unit_vec(m, j)) for j in range(m)]).transpose()
    return quotient, proj


def quotient_bimodule(a: Algebra, ideal: Subspace) -> Tuple[Bimodule, LinearMap]:
    """The A-bimodule A/I with its canonical projection.

    Coordinates on A/I are the cosets of the standard basis vectors at
    the non-pivot columns of I's echelon basis (pivot-greedy, so the
    construction is reproducible bit for bit).
    """
    rep = ideal_check(a, ideal)
    if not rep.passed:
        raise HypothesisError("subspace is not a two-sided ideal", rep)
    m = a.dim
    pivots = []
    for row in ideal.basis:
        pivots.append(next(i for i, x in enumerate(row) if x != 0))
    complement = [j for j in range(m) if j not in pivots]
    q = len(complement)

    def project(v: Vector) -> Vector:
        red = ideal.reduce(v)
        return [red[j] for j in complement]

    left = [[project(a.mul_vec(unit_vec(m, i), unit_vec(m, c))) for c in complement]
            for i in range(m)]
    right = [[project(a.mul_vec(unit_vec(m, c), unit_vec(m, i))) for i in range(m)]
             for c in complement]
    names = [a.basis_names[c] + "+I" for c in complement]
    quotient = Bimodule(a, left, right, basis_names=names)
    proj_matrix = Matrix.from_rows([project(unit_vec(m, j)) for j in range(m)]).transpose()
    projection = LinearMap(a.self_bimodule(), quotient, proj_matrix)
    hom = is_module_hom(projection, "both")
    if not hom.passed:
        raise AssertionError("quotient projection failed the hom re-check")
    return quotient, projection
