"""
Grouplike elements.

An invertible g is right grouplike when Delta(g) = (g (x) g) Delta(1) and
left grouplike when Delta(g) = Delta(1) (g (x) g); grouplike means both.
Cosets are taken modulo the grouplikes of the trivial subalgebra A^T.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import InputError, VerificationError
from .integrals import DualPair
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import WeakBialgebra, dualize
from .wha import WeakHopfAlgebra, as_weak_hopf


class Kind(Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"

    def covers(self, side: "Kind") -> bool:
        return self is Kind.BOTH or self is side


@dataclass(frozen=True)
class GrouplikeWitness:
    """A certified grouplike element with its inverse and normalizations."""
    g: Matrix
    kind: Kind
    inverse: Matrix
    pi_left: Matrix
    pi_right: Matrix

    def to_dict(self, fld) -> dict:
        return {
            "kind": self.kind.value,
            "element": [fld.encode(c) for c in linalg.entries(self.g)],
            "inverse": [fld.encode(c) for c in linalg.entries(self.inverse)],
            "pi_left": [fld.encode(c) for c in linalg.entries(self.pi_left)],
            "pi_right": [fld.encode(c) for c in linalg.entries(self.pi_right)],
        }


@dataclass(frozen=True)
class DistinguishedGrouplikes:
    """s = l <- lambda in A, sigma = lambda <- l in the dual, and the right-handed pair."""
    s: GrouplikeWitness
    sigma: GrouplikeWitness
    s_right: Optional[Matrix]
    sigma_right: Optional[Matrix]
    report: AxiomReport


def _right_form(A: WeakBialgebra, g: Matrix) -> Matrix:
    return A.tensor_multiply(linalg.kron(g, g), A.delta_one, 2)


def _left_form(A: WeakBialgebra, g: Matrix) -> Matrix:
    return A.tensor_multiply(A.delta_one, linalg.kron(g, g), 2)


def classify_grouplike(A: WeakBialgebra, g: Matrix) -> Optional[GrouplikeWitness]:
    """
    Classify g as a left, right or two-sided grouplike element.

    Returns:
        a witness, or None when g is not invertible or satisfies neither
        coproduct identity
    """
    A.check_vector(g, "grouplike candidate")
    inverse = A.inverse_of(g)
    if inverse is None:
        return None
    dg = A.coproduct(g)
    right = linalg.equal(dg, _right_form(A, g))
    left = linalg.equal(dg, _left_form(A, g))
    if left and right:
        kind = Kind.BOTH
    elif right:
        kind = Kind.RIGHT
    elif left:
        kind = Kind.LEFT
    else:
        return None
    P = A.projections
    return GrouplikeWitness(g, kind, inverse, linalg.mul(P.left, g), linalg.mul(P.right, g))


def trivial_grouplike(A: WeakHopfAlgebra, x_left: Matrix, side: Kind = Kind.RIGHT) -> Matrix:
    """
    The trivial grouplike x S(x^-1) (right) or x S^-1(x^-1) (left) of x in A^L.

    Raises:
        InputError: if x is not an invertible element of A^L
        VerificationError: if the result does not classify as claimed
    """
    A = as_weak_hopf(A)
    A.check_vector(x_left, "x_L")
    if side is Kind.BOTH:
        raise InputError("trivial grouplikes are built one side at a time")
    if not A.left_subalgebra.contains(x_left):
        raise InputError("x_L is not in the left subalgebra")
    inverse = A.inverse_of(x_left)
    if inverse is None:
        raise InputError("x_L is not invertible")
    twist = A.S if side is Kind.RIGHT else A.S_inv
    g = A.product(x_left, linalg.mul(twist, inverse))
    witness = classify_grouplike(A, g)
    if witness is None or not witness.kind.covers(side) or not A.trivial_subalgebra.contains(g):
        raise VerificationError(f"x_L S(x_L^-1) is not a {side.value} grouplike of A^T")
    return g


def same_coset(A: WeakBialgebra, g: GrouplikeWitness, h: GrouplikeWitness) -> bool:
    """g and h lie in the same coset of the trivial grouplikes: g h^-1 in A^T."""
    if g.kind is not h.kind:
        raise InputError(f"cannot compare a {g.kind.value} and a {h.kind.value} grouplike")
    return A.trivial_subalgebra.contains(A.product(g.g, h.inverse))


def coset_classes(A: WeakBialgebra, candidates: Sequence[GrouplikeWitness]) -> Tuple[List[List[int]], AxiomReport]:
    """
    Partition candidates into same_coset classes, in first-occurrence order.

    The report certifies that same_coset is an equivalence relation on the
    list.
    """
    n = len(candidates)
    relation = [[same_coset(A, candidates[i], candidates[j]) for j in range(n)] for i in range(n)]
    report = AxiomReport("coset-classes")
    report.check_true("reflexive", "cosets of trivial grouplikes", all(relation[i][i] for i in range(n)))
    symmetric = [[i, j] for i in range(n) for j in range(n) if relation[i][j] != relation[j][i]]
    report.check_true("symmetric", "cosets of trivial grouplikes", not symmetric,
                      witness=symmetric[0] if symmetric else None)
    transitive = [[i, j, k] for i in range(n) for j in range(n) for k in range(n)
                  if relation[i][j] and relation[j][k] and not relation[i][k]]
    report.check_true("transitive", "cosets of trivial grouplikes", not transitive,
                      witness=transitive[0] if transitive else None)
    classes: List[List[int]] = []
    for i in range(n):
        for cls in classes:
            if relation[cls[0]][i]:
                cls.append(i)
                break
        else:
            classes.append([i])
    get_logger().info("grouplikes", "grouplikes", "coset_classes", "candidates partitioned",
                      candidates=n, classes=len(classes))
    return classes, report


def check_grouplike_properties(A: WeakHopfAlgebra, witnesses: Sequence[GrouplikeWitness]) -> AxiomReport:
    """
    Normalizations, closure under products and inverses, and S(G_R) = G_L
    for a list of certified witnesses.
    """
    A = as_weak_hopf(A)
    u = A.unit
    report = AxiomReport("grouplike-properties")
    for t, w in enumerate(witnesses):
        if w.kind.covers(Kind.RIGHT):
            report.check_equal(f"Pi^R of right grouplike is 1 [{t}]", "normalization of grouplikes", w.pi_right, u)
            report.check_equal(f"Pi^L of right grouplike is g S(g) [{t}]", "normalization of grouplikes",
                               w.pi_left, A.product(w.g, linalg.mul(A.S, w.g)))
            image = classify_grouplike(A, linalg.mul(A.S, w.g))
            report.check_true(f"antipode sends right to left grouplike [{t}]", "normalization of grouplikes",
                              image is not None and image.kind.covers(Kind.LEFT))
        if w.kind.covers(Kind.LEFT):
            report.check_equal(f"Pi^L of left grouplike is 1 [{t}]", "normalization of grouplikes", w.pi_left, u)
            report.check_equal(f"Pi^R of left grouplike is S(g) g [{t}]", "normalization of grouplikes",
                               w.pi_right, A.product(linalg.mul(A.S, w.g), w.g))
        inv = classify_grouplike(A, w.inverse)
        report.check_true(f"inverse keeps the kind [{t}]", "grouplikes form groups",
                          inv is not None and inv.kind.covers(w.kind))
    for i, g in enumerate(witnesses):
        for j, h in enumerate(witnesses):
            if g.kind is not h.kind:
                continue
            prod = classify_grouplike(A, A.product(g.g, h.g))
            report.check_true(f"product keeps the kind [{i},{j}]", "grouplikes form groups",
                              prod is not None and prod.kind.covers(g.kind))
    get_logger().info("grouplikes", "grouplikes", "check_grouplike_properties", report.summary(),
                      passed=report.passed)
    return report


def distinguished(A: WeakBialgebra, pair: DualPair) -> DistinguishedGrouplikes:
    """
    Distinguished left grouplikes s = l <- lambda and sigma = lambda <- l.

    The right-handed s_R = rho -> r and sigma_R = r -> rho come from the
    pair's right integrals; Pi^R(s_R) = 1 is certified.

    Raises:
        VerificationError: if s or sigma fails to classify as left grouplike
    """
    report = AxiomReport("distinguished")
    Ahat = dualize(A)
    s = linalg.mul(A.right_hit(pair.lam), pair.l)
    sigma = linalg.mul(A.dual_right_hit(pair.l), pair.lam)
    s_w = classify_grouplike(A, s)
    sigma_w = classify_grouplike(Ahat, sigma)
    report.check_true("s is left grouplike", "distinguished grouplikes",
                      s_w is not None and s_w.kind.covers(Kind.LEFT))
    report.check_true("sigma is left grouplike in the dual", "distinguished grouplikes",
                      sigma_w is not None and sigma_w.kind.covers(Kind.LEFT))
    s_right = sigma_right = None
    if pair.r is not None:
        s_right = linalg.mul(A.left_hit(pair.rho), pair.r)
        sigma_right = linalg.mul(A.dual_left_hit(pair.r), pair.rho)
        report.check_equal("Pi^R(s_R) = 1", "distinguished grouplikes",
                           linalg.mul(A.projections.right, s_right), A.unit)
        right_w = classify_grouplike(A, s_right)
        report.check_true("s_R is right grouplike", "distinguished grouplikes",
                          right_w is not None and right_w.kind.covers(Kind.RIGHT))
    if s_w is not None and s_w.kind is Kind.BOTH and sigma_w is not None:
        report.check_true("sigma grouplike when s is", "distinguished grouplikes", sigma_w.kind is Kind.BOTH)
    get_logger().info("grouplikes", "grouplikes", "distinguished", report.summary(), passed=report.passed)
    if s_w is None or sigma_w is None:
        raise VerificationError("distinguished elements are not grouplike", [report])
    return DistinguishedGrouplikes(s_w, sigma_w, s_right, sigma_right, report)


def grouplike_projections(A: WeakBialgebra, gamma: GrouplikeWitness, side: Kind) -> Matrix:
    """
    Pi^L_gamma(a) = Pi^L(gamma -> a) for a left grouplike gamma of the dual,
    Pi^R_gamma(a) = Pi^R(a <- gamma) for a right one.

    Raises:
        InputError: on a kind mismatch
    """
    if side is Kind.BOTH or not gamma.kind.covers(side):
        raise InputError(f"projection needs a {side.value} grouplike, got {gamma.kind.value}")
    P = A.projections
    if side is Kind.LEFT:
        return linalg.mul(P.left, A.left_hit(gamma.g))
    return linalg.mul(P.right, A.right_hit(gamma.g))


def check_integral_module_structure(A: WeakHopfAlgebra, pair: DualPair,
                                   dist: Optional[DistinguishedGrouplikes] = None) -> AxiomReport:
    """
    l a = l Pi^R_{S-hat(sigma^-1)}(a) and a r = Pi^L_{S-hat(sigma_R^-1)}(a) r,
    with the grouplike projections checked idempotent onto A^R and A^L.
    """
    A = as_weak_hopf(A)
    n = A.dim
    mul = linalg.mul
    Ahat = dualize(A)
    dist = dist or distinguished(A, pair)
    report = AxiomReport("integral-module-structure")

    gamma = classify_grouplike(Ahat, mul(Ahat.S, dist.sigma.inverse))
    report.check_true("S-hat(sigma^-1) is right grouplike", "module structure of integrals",
                      gamma is not None and gamma.kind.covers(Kind.RIGHT))
    if gamma is not None and gamma.kind.covers(Kind.RIGHT):
        proj = grouplike_projections(A, gamma, Kind.RIGHT)
        report.check_equal("twisted right projection idempotent", "module structure of integrals",
                           mul(proj, proj), proj, [n])
        report.check_true("twisted right projection onto A^R", "module structure of integrals",
                          linalg.image(proj) == A.right_subalgebra)
        report.check_equal("l a = l Pi^R_gamma(a)", "module structure of integrals",
                           A.left_mult(pair.l), mul(A.left_mult(pair.l), proj), [n])
    if pair.r is not None and dist.sigma_right is not None:
        sigma_r_inv = Ahat.inverse_of(dist.sigma_right)
        gamma_r = classify_grouplike(Ahat, mul(Ahat.S, sigma_r_inv)) if sigma_r_inv is not None else None
        report.check_true("S-hat(sigma_R^-1) is left grouplike", "module structure of integrals",
                          gamma_r is not None and gamma_r.kind.covers(Kind.LEFT))
        if gamma_r is not None and gamma_r.kind.covers(Kind.LEFT):
            proj = grouplike_projections(A, gamma_r, Kind.LEFT)
            report.check_equal("twisted left projection idempotent", "module structure of integrals",
                               mul(proj, proj), proj, [n])
            report.check_equal("a r = Pi^L_gamma(a) r", "module structure of integrals",
                               A.right_mult(pair.r), mul(A.right_mult(pair.r), proj), [n])
    get_logger().info("grouplikes", "grouplikes", "check_integral_module_structure", report.summary(),
                      passed=report.passed)
    return report


def grouplike_arrow_automorphism(A: WeakBialgebra, gamma: GrouplikeWitness, side: Kind) -> AxiomReport:
    """a -> gamma -> a (left gamma) or a -> a <- gamma (right gamma) is an algebra automorphism."""
    if side is Kind.BOTH or not gamma.kind.covers(side):
        raise InputError(f"arrow automorphism needs a {side.value} grouplike, got {gamma.kind.value}")
    n = A.dim
    T = A.left_hit(gamma.g) if side is Kind.LEFT else A.right_hit(gamma.g)
    report = AxiomReport("grouplike-arrow-automorphism")
    report.check_equal("multiplicative", "arrows by grouplikes",
                       linalg.mul(T, A.mult), linalg.mul(A.mult, linalg.kron(T, T)), [n, n])
    report.check_equal("unital", "arrows by grouplikes", linalg.mul(T, A.unit), A.unit)
    report.check_true("bijective", "arrows by grouplikes", linalg.is_invertible(T))
    return report


def normalize_grouplike(A: WeakBialgebra, t: Matrix) -> Optional[Matrix]:
    """Rescale t so that Delta(t) = (t (x) t) Delta(1) when it holds up to a scalar."""
    dt, form = A.coproduct(t), _right_form(A, t)
    if linalg.is_zero(form):
        return None
    row = min(form.rep)
    c = linalg.entry(dt, row, 0) / linalg.entry(form, row, 0)
    if not c or not linalg.equal(dt, linalg.scale(form, c)):
        return None
    return linalg.scale(t, c)


def s2_implementer_on_AT(A: WeakHopfAlgebra, bound: int = 3) -> Optional[Matrix]:
    """
    A grouplike t in A^T with S^2(x) = t x t^-1 for x in A^T.

    Solves S^2(x) t = t x over a basis of A^T, then searches the solution
    space with bounded integer coordinates for an invertible element that is
    grouplike after rescaling.
    """
    A = as_weak_hopf(A)
    AT = A.trivial_subalgebra
    S2 = A.antipode_power(2)
    ys = AT.vectors()
    blocks = []
    for x in ys:
        s2x = linalg.mul(S2, x)
        blocks.append(linalg.hstack(*[linalg.sub(A.product(s2x, y), A.product(y, x)) for y in ys]))
    solutions = linalg.kernel(linalg.vstack(*blocks))
    candidates = [linalg.mul(AT.basis, c) for c in solutions.vectors()]
    span = Subspace.span(candidates, A.dim, A.K) if candidates else Subspace.zero(A.dim, A.K)
    for coeffs in linalg.bounded_vectors(span.dim, bound):
        t = linalg.linear_combination([A.field.convert(c) for c in coeffs], span.vectors())
        if t is None or A.inverse_of(t) is None:
            continue
        t = normalize_grouplike(A, t)
        if t is None:
            continue
        witness = classify_grouplike(A, t)
        if witness is not None and witness.kind is Kind.BOTH and AT.contains(t):
            get_logger().info("grouplikes", "grouplikes", "s2_implementer_on_AT", "implementer found",
                              solution_dim=span.dim)
            return t
    get_logger().info("grouplikes", "grouplikes", "s2_implementer_on_AT", "no implementer within bound",
                      solution_dim=span.dim, bound=bound)
    return None


def check_s2_implementer(A: WeakHopfAlgebra, t: Matrix) -> AxiomReport:
    """S^2(x) = t x t^-1 on every basis element of A^T."""
    A = as_weak_hopf(A)
    report = AxiomReport("s2-implementer")
    t_inv = A.inverse_of(t)
    report.check_true("implementer invertible", "S^2 is inner on A^T", t_inv is not None)
    report.check_true("implementer in A^T", "S^2 is inner on A^T", A.trivial_subalgebra.contains(t))
    if t_inv is not None:
        S2 = A.antipode_power(2)
        for i, x in enumerate(A.trivial_subalgebra.vectors()):
            report.check_equal(f"S^2 is conjugation [{i}]", "S^2 is inner on A^T",
                               linalg.mul(S2, x), A.product(A.product(t, x), t_inv))
    return report
