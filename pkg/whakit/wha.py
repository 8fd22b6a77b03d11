"""
Weak Hopf algebras: antipode axioms, derived antipode identities, the
separability data of the left and right subalgebras and their Nakayama
automorphisms.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional

from . import linalg
from .errors import InputError
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import WeakBialgebra


@dataclass(frozen=True, eq=False)
class WeakHopfAlgebra(WeakBialgebra):
    """A weak bialgebra together with its antipode matrix S."""
    antipode: Optional[Matrix] = None

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise InputError("a weak Hopf algebra needs an antipode")
        if self.antipode.shape != (self.dim, self.dim):
            raise InputError(f"dimension mismatch: antipode has shape {self.antipode.shape}, "
                             f"expected ({self.dim}, {self.dim})")
        object.__setattr__(self, "antipode", linalg.sparse(self.antipode))

    @classmethod
    def from_bialgebra(cls, A: WeakBialgebra, antipode: Matrix) -> "WeakHopfAlgebra":
        return cls(field=A.field, mult=A.mult, unit=A.unit, comult=A.comult, counit=A.counit,
                   basis=A.basis, name=A.name, antipode=antipode)

    @property
    def base(self) -> WeakBialgebra:
        """The underlying weak bialgebra with the antipode forgotten."""
        return WeakBialgebra(field=self.field, mult=self.mult, unit=self.unit, comult=self.comult,
                             counit=self.counit, basis=self.basis, name=self.name)

    @cached_property
    def antipode_inverse(self) -> Optional[Matrix]:
        return linalg.inverse(self.antipode)

    @property
    def S(self) -> Matrix:
        return self.antipode

    @property
    def S_inv(self) -> Matrix:
        inv = self.antipode_inverse
        if inv is None:
            raise InputError("the antipode is not invertible")
        return inv

    def antipode_power(self, k: int) -> Matrix:
        """S^k for any integer k."""
        if k >= 0:
            return linalg.power(self.S, k)
        return linalg.power(self.S_inv, -k)

    @property
    def dual_antipode(self) -> Matrix:
        return linalg.transpose(self.S)

    def dual(self) -> "WeakHopfAlgebra":
        base = super().dual()
        return WeakHopfAlgebra.from_bialgebra(base, linalg.transpose(self.antipode))


def as_weak_hopf(A: WeakBialgebra) -> WeakHopfAlgebra:
    if not isinstance(A, WeakHopfAlgebra):
        raise InputError(f"{A.name or 'input'} carries no antipode")
    return A


@dataclass(frozen=True)
class SeparabilityData:
    """Separating idempotents and counit-dual bases of A^L."""
    q_left: Matrix
    q_right: Matrix
    left_basis: List[Matrix]
    dual_basis_e: Optional[List[Matrix]]
    dual_basis_f: Optional[List[Matrix]]
    gram: Matrix
    report: AxiomReport


@dataclass(frozen=True)
class NakayamaData:
    """Nakayama automorphisms of the counit on A^L and A^R, in subspace coordinates."""
    theta_left: Optional[Matrix]
    theta_right: Optional[Matrix]
    left: Subspace
    right: Subspace
    report: AxiomReport


def check_wha(A: WeakHopfAlgebra) -> AxiomReport:
    """Antipode axioms and the basic properties of the antipode."""
    logger = get_logger()
    A = as_weak_hopf(A)
    n, M, D, S, I = A.dim, A.mult, A.comult, A.S, A.identity
    kron, mul = linalg.kron, linalg.mul
    P = A.projections
    report = AxiomReport("wha")

    report.check_equal("antipode gives left projection", "antipode axioms",
                       mul(M, kron(I, S), D), P.left, [n])
    report.check_equal("antipode gives right projection", "antipode axioms",
                       mul(M, kron(S, I), D), P.right, [n])
    report.check_equal("antipode sandwich", "antipode axioms",
                       mul(M, kron(M, I), kron(S, I, S), kron(D, I), D), S, [n])
    invertible = A.antipode_inverse is not None
    report.check_true("antipode invertible", "properties of the antipode", invertible)
    report.check_equal("antipode antimultiplicative", "properties of the antipode",
                       mul(S, M), mul(M, kron(S, S), A.flip), [n, n])
    report.check_equal("antipode anticomultiplicative", "properties of the antipode",
                       mul(D, S), mul(kron(S, S), A.flip, D), [n])
    report.check_equal("counit invariant under antipode", "properties of the antipode",
                       mul(A.counit, S), A.counit, [n])
    logger.info("wha", "wha", "check_wha", report.summary(), passed=report.passed, name=A.name)
    return report


def check_projection_identities(A: WeakHopfAlgebra) -> AxiomReport:
    """Relations between the antipode and the canonical projections."""
    A = as_weak_hopf(A)
    n, M, D, S, I = A.dim, A.mult, A.comult, A.S, A.identity
    kron, mul = linalg.kron, linalg.mul
    P = A.projections
    report = AxiomReport("projection-identities")

    report.check_equal("left projection after antipode", "antipode and projections",
                       mul(P.left, S), mul(P.left, P.right), [n])
    report.check_equal("left projection after right projection", "antipode and projections",
                       mul(P.left, P.right), mul(S, P.right), [n])
    report.check_equal("right projection after antipode", "antipode and projections",
                       mul(P.right, S), mul(P.right, P.left), [n])
    report.check_equal("right projection after left projection", "antipode and projections",
                       mul(P.right, P.left), mul(S, P.left), [n])

    report.check_equal("left projection from antipode", "projections through the antipode",
                       P.left, mul(M, kron(I, S), D), [n])
    report.check_equal("right projection from antipode", "projections through the antipode",
                       P.right, mul(M, kron(S, I), D), [n])
    if A.antipode_inverse is not None:
        report.check_equal("left bar projection from antipode", "projections through the antipode",
                           P.left_bar, mul(A.S_inv, P.right), [n])
        report.check_equal("right bar projection from antipode", "projections through the antipode",
                           P.right_bar, mul(A.S_inv, P.left), [n])
    else:
        report.check_true("left bar projection from antipode", "projections through the antipode", False,
                          detail="antipode not invertible")
        report.check_true("right bar projection from antipode", "projections through the antipode", False,
                          detail="antipode not invertible")

    epsM = mul(A.counit, M)
    triple = mul(epsM, kron(M, I))
    report.check_equal("counit of triple product through left projection", "counit and projections",
                       triple, mul(epsM, kron(I, mul(P.left, M))), [n, n, n])
    report.check_equal("counit of triple product through right projection", "counit and projections",
                       triple, mul(epsM, kron(mul(P.right, M), I)), [n, n, n])
    get_logger().info("wha", "wha", "check_projection_identities", report.summary(), passed=report.passed)
    return report


def _gram(A: WeakBialgebra, vectors: List[Matrix]) -> Matrix:
    K = A.K
    rows = {i: {j: A.counit_of(A.product(x, y)) for j, y in enumerate(vectors)}
            for i, x in enumerate(vectors)}
    return linalg.from_rows(rows, (len(vectors), len(vectors)), K)


def separability(A: WeakHopfAlgebra) -> SeparabilityData:
    """
    Separating idempotents of A^L and A^R and the counit-dual bases of A^L.

    The dual bases satisfy epsilon(e_i f_j) = delta_ij with e_i the RREF basis
    of A^L; a singular Gram matrix is reported as a failing entry.
    """
    A = as_weak_hopf(A)
    n, S, I, M = A.dim, A.S, A.identity, A.mult
    kron, mul = linalg.kron, linalg.mul
    report = AxiomReport("separability")
    q_left = mul(kron(S, I), A.delta_one)
    q_right = mul(kron(I, S), A.delta_one)
    AL, AR = A.left_subalgebra, A.right_subalgebra

    for t, x in enumerate(AL.vectors()):
        report.check_equal(f"left separating idempotent [{t}]", "separating idempotents",
                           mul(kron(A.left_mult(x), I), q_left), mul(kron(I, A.right_mult(x)), q_left), [n, n])
        report.check_equal(f"left quasibasis (first leg) [{t}]", "counit quasibasis",
                           mul(kron(I, mul(A.counit, A.right_mult(x))), q_left), x, [n])
        report.check_equal(f"left quasibasis (second leg) [{t}]", "counit quasibasis",
                           mul(kron(mul(A.counit, A.left_mult(x)), I), q_left), x, [n])
    for t, x in enumerate(AR.vectors()):
        report.check_equal(f"right separating idempotent [{t}]", "separating idempotents",
                           mul(kron(A.left_mult(x), I), q_right), mul(kron(I, A.right_mult(x)), q_right), [n, n])
        report.check_equal(f"right quasibasis (first leg) [{t}]", "counit quasibasis",
                           mul(kron(I, mul(A.counit, A.right_mult(x))), q_right), x, [n])
        report.check_equal(f"right quasibasis (second leg) [{t}]", "counit quasibasis",
                           mul(kron(mul(A.counit, A.left_mult(x)), I), q_right), x, [n])
    report.check_equal("left separating idempotent has index one", "counit is index one",
                       mul(M, q_left), A.unit, [n])
    report.check_equal("right separating idempotent has index one", "counit is index one",
                       mul(M, q_right), A.unit, [n])

    basis = AL.vectors()
    gram = _gram(A, basis)
    gram_inv = linalg.inverse(gram) if basis else None
    e_basis = f_basis = None
    if gram_inv is None:
        report.check_true("counit degenerate on A^L", "counit-dual bases", False,
                          detail="Gram matrix of the counit on A^L is singular")
    else:
        e_basis = basis
        f_basis = [linalg.linear_combination(linalg.entries(linalg.column_of(gram_inv, j)), basis)
                   for j in range(len(basis))]
        duality = linalg.from_rows(
            {i: {j: A.counit_of(A.product(e, f)) for j, f in enumerate(f_basis)} for i, e in enumerate(e_basis)},
            (len(basis), len(basis)), A.K)
        report.check_equal("counit-dual bases", "counit-dual bases", duality, linalg.identity(len(basis), A.K))
        index = linalg.add(*[A.product(f, e) for e, f in zip(e_basis, f_basis)])
        report.check_equal("index of the counit on A^L", "counit is index one", index, A.unit, [n])
    get_logger().info("wha", "wha", "separability", report.summary(), passed=report.passed)
    return SeparabilityData(q_left, q_right, basis, e_basis, f_basis, gram, report)


def _nakayama_coordinates(A: WeakBialgebra, space: Subspace) -> Optional[Matrix]:
    gram = _gram(A, space.vectors())
    inv = linalg.inverse(gram)
    if inv is None:
        return None
    return linalg.mul(inv, linalg.transpose(gram))


def nakayama_LR(A: WeakHopfAlgebra) -> NakayamaData:
    """
    Nakayama automorphisms of the counit restricted to A^L and A^R.

    theta_L is defined by epsilon(y theta_L(x)) = epsilon(x y); it is compared
    with S^2 on A^L and with the arrow route 1 <- S-hat^{-1}(1-hat <- x).
    theta_R is compared with S^{-2} on A^R.
    """
    A = as_weak_hopf(A)
    mul, T = linalg.mul, linalg.transpose
    report = AxiomReport("nakayama")
    AL, AR = A.left_subalgebra, A.right_subalgebra
    theta_left = _nakayama_coordinates(A, AL)
    theta_right = _nakayama_coordinates(A, AR)
    S2, Sm2 = A.antipode_power(2), A.antipode_power(-2)

    if theta_left is None:
        report.check_true("theta_L defined", "Nakayama automorphisms", False,
                          detail="counit degenerate on A^L")
    else:
        s2_left = linalg.restrict(S2, AL, AL)
        report.check_true("S^2 preserves A^L", "Nakayama automorphisms", s2_left is not None)
        if s2_left is not None:
            report.check_equal("theta_L equals S^2 on A^L", "Nakayama automorphisms", theta_left, s2_left)
        route = linalg.hstack(*[
            mul(A.right_hit(mul(T(A.S_inv), A.kappa_right(x))), A.unit) for x in AL.vectors()])
        report.check_equal("theta_L by arrows", "Nakayama automorphisms",
                           mul(AL.basis, theta_left), route)
    if theta_right is None:
        report.check_true("theta_R defined", "Nakayama automorphisms", False,
                          detail="counit degenerate on A^R")
    else:
        sm2_right = linalg.restrict(Sm2, AR, AR)
        report.check_true("S^-2 preserves A^R", "Nakayama automorphisms", sm2_right is not None)
        if sm2_right is not None:
            report.check_equal("theta_R equals S^-2 on A^R", "Nakayama automorphisms", theta_right, sm2_right)
        route = linalg.hstack(*[
            mul(A.left_hit(mul(T(A.S), A.kappa_right(x))), A.unit) for x in AR.vectors()])
        report.check_equal("theta_R by arrows", "Nakayama automorphisms",
                           mul(AR.basis, theta_right), route)
    get_logger().info("wha", "wha", "nakayama_LR", report.summary(), passed=report.passed)
    return NakayamaData(theta_left, theta_right, AL, AR, report)
