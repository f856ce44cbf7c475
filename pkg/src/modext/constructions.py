"""Recipes that build verified derivations on module extensions.

Four constructions, each of which audits its hypotheses, builds a map on
the appropriate T(A,U), and re-verifies the Leibniz identity before
returning.  Hypothesis failures raise HypothesisError with the failing
identity and an exact witness; no unverified map is ever emitted.

  lift        D((a,u)) = (0, delta(a)) for a derivation delta: A -> U
  transport   D((a,x)) = (delta(a), tau(x)) with tau = phi o delta o psi
  quotient    D on T(A, A/I) induced by delta with delta(I) in I
  corner      D on T(A, Ap) with tau(x) = delta(x) p for idempotent p
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebra import (
    Algebra,
    Bimodule,
    Element,
    LinearMap,
    is_module_hom,
)
from .blocks import BlockDecomposition, assemble, check_block_conditions
from .derivations import is_derivation
from .extension import ModuleExtension, quotient_bimodule, trivial_extension
from .linalg import (
    Matrix,
    Subspace,
    is_zero_vec,
    rref,
    unit_vec,
    vec_add,
)
from .reports import ConditionReport, HypothesisError


@dataclass
class ConstructionResult:
    derivation: LinearMap          # a verified derivation on T
    extension: ModuleExtension
    recipe: str
    verification: ConditionReport


def _verify(t: ModuleExtension, d: LinearMap, recipe: str) -> ConstructionResult:
    rep = is_derivation(t.total, t.total.self_bimodule(), d)
    if not rep.passed:
        raise AssertionError("%s produced a non-derivation" % recipe)
    return ConstructionResult(d, t, recipe, rep)


def lift(t: ModuleExtension, delta: LinearMap) -> ConstructionResult:
    """D((a,u)) = (0, delta(a)); a derivation iff delta: A -> U is one."""
    rep = is_derivation(t.base, t.module, delta)
    if not rep.passed:
        raise HypothesisError("delta is not a derivation A -> U", rep)
    d = assemble(
        t,
        BlockDecomposition(
            LinearMap.zero(t.base, t.base),
            LinearMap.zero(t.module, t.base),
            delta,
            LinearMap.zero(t.module, t.module),
        ),
    )
    return _verify(t, d, "lift")


def transport(
    t: ModuleExtension,
    delta: LinearMap,
    phi: LinearMap,
    psi: LinearMap,
) -> ConstructionResult:
    """D((a,x)) = (delta(a), tau(x)) with tau = phi o delta o psi.

    Requires phi: A -> U and psi: U -> A to be two-sided module
    homomorphisms with phi o psi = identity on U, and delta in Der(A).
    """
    a, u = t.base, t.module
    asb = a.self_bimodule()
    phi_hom = is_module_hom(LinearMap(asb, u, phi.matrix), "both")
    if not phi_hom.passed:
        raise HypothesisError("phi is not an A-bimodule homomorphism", phi_hom)
    psi_hom = is_module_hom(LinearMap(u, asb, psi.matrix), "both")
    if not psi_hom.passed:
        raise HypothesisError("psi is not an A-bimodule homomorphism", psi_hom)
    if phi.matrix * psi.matrix != Matrix.identity(u.dim):
        raise HypothesisError("phi o psi is not the identity on U")
    der = is_derivation(a, asb, delta)
    if not der.passed:
        raise HypothesisError("delta is not a derivation on A", der)

    tau = phi.matrix * delta.matrix * psi.matrix
    _check_tau_identities(a, u, delta.matrix, tau)
    d = assemble(
        t,
        BlockDecomposition(
            delta,
            LinearMap.zero(u, a),
            LinearMap.zero(a, u),
            LinearMap(u, u, tau),
        ),
    )
    return _verify(t, d, "transport")


def _check_tau_identities(a: Algebra, u: Bimodule, delta: Matrix, tau: Matrix):
    """tau(ax) = a tau(x) + delta(a) x and tau(xa) = tau(x) a + x delta(a)."""
    for i in range(a.dim):
        ei = unit_vec(a.dim, i)
        da = delta.col(i)
        for j in range(u.dim):
            uj = unit_vec(u.dim, j)
            lhs = tau.apply(u.left_act(ei, uj))
            rhs = vec_add(u.left_act(ei, tau.col(j)), u.left_act(da, uj))
            if lhs != rhs:
                raise AssertionError(
                    "tau(ax) = a tau(x) + delta(a) x failed at %r" % ((i, j),)
                )
            lhs = tau.apply(u.right_act(uj, ei))
            rhs = vec_add(u.right_act(tau.col(j), ei), u.right_act(uj, da))
            if lhs != rhs:
                raise AssertionError(
                    "tau(xa) = tau(x) a + x delta(a) failed at %r" % ((i, j),)
                )


def quotient_derivation(
    a: Algebra, ideal: Subspace, delta: LinearMap
) -> ConstructionResult:
    """Induced derivation on T(A, A/I) for delta with delta(I) in I.

    tau(a + I) = delta(a) + I on quotient coordinates; the returned map
    is D((a,u)) = (delta(a), tau(u)).
    """
    quotient, projection = quotient_bimodule(a, ideal)  # rejects non-ideals
    asb = a.self_bimodule()
    der = is_derivation(a, asb, delta)
    if not der.passed:
        raise HypothesisError("delta is not a derivation on A", der)
    for w in ideal.basis:
        img = delta.matrix.apply(w)
        if not ideal.contains_vector(img):
            rep = ConditionReport("delta(I) in I")
            rep.add("delta(I) in I", False, witness=((), w, img))
            raise HypothesisError("delta does not preserve the ideal", rep)

    # tau on quotient coordinates: project delta of the coset representatives
    m = a.dim
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in ideal.basis]
    complement = [j for j in range(m) if j not in pivots]
    tau_cols = [projection.matrix.apply(delta.matrix.apply(unit_vec(m, c)))
                for c in complement]
    tau = Matrix.from_rows(
        [[tau_cols[j][k] for j in range(len(complement))]
         for k in range(quotient.dim)]
    )
    # commuting square: projection o delta = tau o projection on all of A
    if projection.matrix * delta.matrix != tau * projection.matrix:
        raise AssertionError("induced tau does not commute with the projection")
    _check_tau_identities(a, quotient, delta.matrix, tau)

    t = trivial_extension(a, quotient)
    d = assemble(
        t,
        BlockDecomposition(
            delta,
            LinearMap.zero(quotient, a),
            LinearMap.zero(a, quotient),
            LinearMap(quotient, quotient, tau),
        ),
    )
    return _verify(t, d, "quotient")


def corner_basis(a: Algebra, p) -> Subspace:
    """Canonical echelon basis of A p, the image of right multiplication by p."""
    coords = p.coords if isinstance(p, Element) else list(p)
    vectors = [a.mul_vec(unit_vec(a.dim, i), coords) for i in range(a.dim)]
    return Subspace.from_vectors(a.dim, vectors)


def _require_idempotent(a: Algebra, p) -> list:
    coords = p.coords if isinstance(p, Element) else list(p)
    if is_zero_vec(coords):
        raise HypothesisError("p = 0 is a trivial idempotent")
    square = a.mul_vec(coords, coords)
    if square != list(coords):
        rep = ConditionReport("idempotent")
        rep.add("p^2 = p", False, witness=((), square, list(coords)))
        raise HypothesisError("p is not idempotent", rep)
    return list(coords)


def corner_module(a: Algebra, p) -> Bimodule:
    """The left ideal A p as a bimodule: usual left action, zero right action."""
    coords = _require_idempotent(a, p)
    basis = corner_basis(a, coords)
    q = basis.dim
    left = []
    for i in range(a.dim):
        row = []
        for j in range(q):
            prod = a.mul_vec(unit_vec(a.dim, i), basis.basis[j])
            c = basis.coords_of(prod)
            if c is None:
                raise AssertionError("left action escaped A p")
            row.append(c)
        left.append(row)
    right = [[[0] * q for _ in range(a.dim)] for _ in range(q)]
    names = ["b%d" % j for j in range(q)]
    return Bimodule(a, left, right, basis_names=names)


def corner_tau(a: Algebra, p, delta: LinearMap) -> ConstructionResult:
    """D((a,x)) = (delta(a), tau(x)) on T(A, Ap) with tau(x) = delta(x) p."""
    coords = _require_idempotent(a, p)
    asb = a.self_bimodule()
    der = is_derivation(a, asb, delta)
    if not der.passed:
        raise HypothesisError("delta is not a derivation on A", der)
    module = corner_module(a, coords)
    basis = corner_basis(a, coords)
    q = basis.dim
    tau_cols = []
    for j in range(q):
        img = a.mul_vec(delta.matrix.apply(basis.basis[j]), coords)
        c = basis.coords_of(img)
        if c is None:
            raise AssertionError("tau image escaped A p")
        tau_cols.append(c)
    tau = Matrix.from_rows([[tau_cols[j][k] for j in range(q)] for k in range(q)])
    _check_tau_identities(a, module, delta.matrix, tau)

    t = trivial_extension(a, module)
    d = assemble(
        t,
        BlockDecomposition(
            delta,
            LinearMap.zero(module, a),
            LinearMap.zero(a, module),
            LinearMap(module, module, tau),
        ),
    )
    return _verify(t, d, "corner")
