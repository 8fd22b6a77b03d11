"""
The Nakayama automorphism of a dual integral, the Radford formula for S^4
and the order of the antipode.

For a dual pair (l, lambda) with distinguished left grouplikes s = l <- lambda
and sigma = lambda <- l:

    theta(a)  = sigma^-1 -> S^2(a) = (s^-1 S^-2(a) s) <- S-hat^-1(sigma)
    S^4(a)    = sigma -> (s^-1 a s) <- S-hat^-1(sigma)

Iterating the second identity shows S^{4m} is inner by a grouplike of A^T for
some m, which is what :func:`antipode_order` searches for.
"""

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .errors import InputError, VerificationError
from .grouplikes import (GrouplikeWitness, Kind, classify_grouplike, distinguished,
                         grouplike_arrow_automorphism, normalize_grouplike)
from .integrals import DualPair, Side, dual_pair, hat_left, hat_right, integral_space, is_nondegenerate, unimodularity
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import dualize
from .wha import WeakHopfAlgebra, as_weak_hopf


@dataclass(frozen=True)
class NakayamaAutomorphism:
    """theta with lambda(a b) = lambda(b theta(a)), and the report comparing its three routes."""
    theta: Matrix
    report: AxiomReport


@dataclass(frozen=True)
class AntipodeOrder:
    """
    Strict order of S (least m with S^m = id) and the least m for which
    S^{4m} is conjugation by a grouplike y of A^T.
    """
    strict_order: Optional[int]
    inner_order: Optional[int]
    inner_witness: Optional[GrouplikeWitness]
    report: AxiomReport


def _dual_power(Ahat, phi: Matrix, m: int) -> Matrix:
    result = Ahat.unit
    for _ in range(m):
        result = Ahat.product(result, phi)
    return result


def nakayama_lambda(A: WeakHopfAlgebra, pair: DualPair) -> NakayamaAutomorphism:
    """
    theta = R-hat_lambda^-1 L-hat_lambda, compared against both closed forms.

    Raises:
        VerificationError: if R-hat_lambda is singular or a distinguished
            element is not grouplike
    """
    A = as_weak_hopf(A)
    n = A.dim
    mul, kron, T = linalg.mul, linalg.kron, linalg.transpose
    lam = pair.lam
    report = AxiomReport("nakayama-lambda")

    R_hat_inv = linalg.inverse(hat_right(A, lam))
    if R_hat_inv is None:
        report.check_true("R-hat_lambda invertible", "Nakayama automorphism of lambda", False)
        raise VerificationError("lambda is degenerate: R-hat_lambda is singular", [report])
    theta = mul(R_hat_inv, hat_left(A, lam))

    dist = distinguished(A, pair)
    s, sigma = dist.s, dist.sigma
    S2, S_minus2 = A.antipode_power(2), A.antipode_power(-2)
    first = mul(A.left_hit(sigma.inverse), S2)
    sigma_twisted = mul(T(A.S_inv), sigma.g)
    second = mul(A.right_hit(sigma_twisted), A.left_mult(s.inverse), A.right_mult(s.g), S_minus2)

    report.check_equal("lambda(a b) = lambda(b theta(a))", "Nakayama automorphism of lambda",
                       mul(T(lam), A.mult), mul(T(lam), A.mult, A.flip, kron(theta, A.identity)), [n, n])
    report.check_equal("theta = sigma^-1 -> S^2", "Nakayama automorphism of lambda", theta, first, [n])
    report.check_equal("theta = (s^-1 S^-2 s) <- S-hat^-1(sigma)", "Nakayama automorphism of lambda",
                       theta, second, [n])
    report.check_equal("theta multiplicative", "Nakayama automorphism of lambda",
                       mul(theta, A.mult), mul(A.mult, kron(theta, theta)), [n, n])
    report.check_equal("theta unital", "Nakayama automorphism of lambda", mul(theta, A.unit), A.unit)
    report.check_true("theta bijective", "Nakayama automorphism of lambda", linalg.is_invertible(theta))
    get_logger().info("radford", "radford", "nakayama_lambda", report.summary(), passed=report.passed)
    return NakayamaAutomorphism(theta, report)


def radford_formula(A: WeakHopfAlgebra, s: GrouplikeWitness, sigma: GrouplikeWitness, m: int = 1) -> Matrix:
    """
    Matrix of a -> S^{4m}(s^-1)...S^4(s^-1) (sigma^m -> a <- S-hat^-1(sigma^m)) S^4(s)...S^{4m}(s).

    For m = 1 this is a -> sigma -> (s^-1 a s) <- S-hat^-1(sigma), the arrows
    by grouplikes being algebra automorphisms.
    """
    A = as_weak_hopf(A)
    mul = linalg.mul
    Ahat = dualize(A)
    sigma_m = _dual_power(Ahat, sigma.g, m)
    twisted = mul(linalg.transpose(A.S_inv), sigma_m)
    left, right = A.unit, A.unit
    for k in range(1, m + 1):
        S4k = A.antipode_power(4 * k)
        left = A.product(mul(S4k, s.inverse), left)
        right = A.product(right, mul(S4k, s.g))
    return mul(A.left_mult(left), A.right_mult(right), A.left_hit(sigma_m), A.right_hit(twisted))


def radford_check(A: WeakHopfAlgebra, pair: DualPair) -> AxiomReport:
    """S^4(a) = sigma -> (s^-1 a s) <- S-hat^-1(sigma) as matrices."""
    A = as_weak_hopf(A)
    dist = distinguished(A, pair)
    report = AxiomReport("radford")
    mul = linalg.mul
    rhs = mul(A.left_hit(dist.sigma.g), A.right_hit(mul(linalg.transpose(A.S_inv), dist.sigma.g)),
              A.left_mult(dist.s.inverse), A.right_mult(dist.s.g))
    report.check_equal("S^4 = sigma -> s^-1 (.) s <- S-hat^-1(sigma)", "Radford formula",
                       A.antipode_power(4), rhs, [A.dim])
    get_logger().info("radford", "radford", "radford_check", report.summary(), passed=report.passed)
    return report


def radford_power(A: WeakHopfAlgebra, pair: DualPair, m: int) -> AxiomReport:
    """
    The iterated Radford formula for S^{4m}, and the m-th power of the
    single formula.
    """
    A = as_weak_hopf(A)
    if m < 1:
        raise InputError(f"m must be at least 1, got {m}")
    Ahat = dualize(A)
    dist = distinguished(A, pair)
    report = AxiomReport("radford-power")
    S4m = A.antipode_power(4 * m)
    report.check_equal(f"S^{4 * m} iterated formula", "iterating the Radford formula",
                       S4m, radford_formula(A, dist.s, dist.sigma, m), [A.dim])
    report.check_equal(f"S^{4 * m} = (S^4 formula)^{m}", "iterating the Radford formula",
                       S4m, linalg.power(radford_formula(A, dist.s, dist.sigma, 1), m), [A.dim])

    sigma_m = classify_grouplike(Ahat, _dual_power(Ahat, dist.sigma.g, m))
    report.check_true("sigma^m is left grouplike", "iterating the Radford formula",
                      sigma_m is not None and sigma_m.kind.covers(Kind.LEFT))
    if sigma_m is not None and sigma_m.kind.covers(Kind.LEFT):
        report.extend(grouplike_arrow_automorphism(A, sigma_m, Kind.LEFT), "sigma^m: ")
        twisted = classify_grouplike(Ahat, linalg.mul(linalg.transpose(A.S_inv), sigma_m.g))
        report.check_true("S-hat^-1(sigma^m) is right grouplike", "iterating the Radford formula",
                          twisted is not None and twisted.kind.covers(Kind.RIGHT))
        if twisted is not None and twisted.kind.covers(Kind.RIGHT):
            report.extend(grouplike_arrow_automorphism(A, twisted, Kind.RIGHT), "S-hat^-1(sigma^m): ")
    get_logger().info("radford", "radford", "radford_power", report.summary(), passed=report.passed, m=m)
    return report


def _inner_implementer(A: WeakHopfAlgebra, power: Matrix, bound: int) -> Optional[GrouplikeWitness]:
    """A grouplike y of A^T with power(x) y = y x on a basis of A, or None."""
    AT = A.trivial_subalgebra
    blocks = []
    for i in range(A.dim):
        x = A.basis_vector(i)
        blocks.append(linalg.sub(linalg.mul(A.left_mult(linalg.mul(power, x)), AT.basis),
                                 linalg.mul(A.right_mult(x), AT.basis)))
    solutions = linalg.kernel(linalg.vstack(*blocks))
    candidates = [linalg.mul(AT.basis, c) for c in solutions.vectors()]
    if not candidates:
        return None
    span = Subspace.span(candidates, A.dim, A.K)
    for coeffs in linalg.bounded_vectors(span.dim, bound):
        y = linalg.linear_combination([A.field.convert(c) for c in coeffs], span.vectors())
        if y is None or A.inverse_of(y) is None:
            continue
        y = normalize_grouplike(A, y)
        if y is None:
            continue
        witness = classify_grouplike(A, y)
        if witness is not None and witness.kind is Kind.BOTH:
            return witness
    return None


def antipode_order(A: WeakHopfAlgebra, max_m: int = 24, bound: int = 3) -> AntipodeOrder:
    """
    Bounded search for the order of S, strictly and up to inner grouplikes.

    Args:
        max_m: largest exponent tried for both searches
        bound: coordinate bound of the search for y inside the solution space
    """
    A = as_weak_hopf(A)
    logger = get_logger()
    report = AxiomReport("antipode-order")
    strict = None
    power = A.identity
    for m in range(1, max_m + 1):
        power = linalg.mul(power, A.S)
        if linalg.equal(power, A.identity):
            strict = m
            break

    inner_order, witness = None, None
    S4 = A.antipode_power(4)
    power = A.identity
    for m in range(1, max_m + 1):
        power = linalg.mul(power, S4)
        found = _inner_implementer(A, power, bound)
        if found is not None:
            inner_order, witness = m, found
            break

    if witness is not None:
        y_inv = witness.inverse
        report.check_true("y in the trivial subalgebra", "antipode order up to inner grouplikes",
                          A.trivial_subalgebra.contains(witness.g))
        report.check_true("y grouplike", "antipode order up to inner grouplikes", witness.kind is Kind.BOTH)
        conj = linalg.mul(A.left_mult(witness.g), A.right_mult(y_inv))
        report.check_equal(f"S^{4 * inner_order} = y (.) y^-1", "antipode order up to inner grouplikes",
                           linalg.power(S4, inner_order), conj, [A.dim])
    else:
        report.check_true("inner witness within bound", "antipode order up to inner grouplikes", False,
                          detail=f"no grouplike implementer of S^4m for m <= {max_m}")
    if strict is not None:
        report.check_equal(f"S^{strict} = id", "order of the antipode",
                           linalg.power(A.S, strict), A.identity, [A.dim])
    logger.info("radford", "radford", "antipode_order", report.summary(),
                strict_order=strict, inner_order=inner_order, max_m=max_m)
    return AntipodeOrder(strict, inner_order, witness, report)


def gauge_check(A: WeakHopfAlgebra, pair: DualPair, beta: GrouplikeWitness, bound: int = 3) -> AxiomReport:
    """
    Regauge the left integral by B(a) = beta -> a <- S-hat^-1(beta) for a left
    grouplike beta of the dual.

    Certifies that B is an algebra automorphism mapping I^L onto I^L, that
    B(l) is again non-degenerate, and that its distinguished sigma~ lies in
    the trivial-grouplike coset of sigma and of S-hat^-2(beta) sigma beta^-1.
    The unimodularity cross-check is appended.
    """
    A = as_weak_hopf(A)
    n = A.dim
    mul, T = linalg.mul, linalg.transpose
    Ahat = dualize(A)
    report = AxiomReport("gauge")
    report.check_true("beta is left grouplike", "gauge transformations of integrals", beta.kind.covers(Kind.LEFT))
    if not beta.kind.covers(Kind.LEFT):
        return report
    twisted = mul(T(A.S_inv), beta.g)
    B = mul(A.left_hit(beta.g), A.right_hit(twisted))
    report.check_equal("B multiplicative", "gauge transformations of integrals",
                       mul(B, A.mult), mul(A.mult, linalg.kron(B, B)), [n, n])
    report.check_equal("B unital", "gauge transformations of integrals", mul(B, A.unit), A.unit)
    report.check_true("B bijective", "gauge transformations of integrals", linalg.is_invertible(B))
    IL = integral_space(A, Side.LEFT).basis
    report.check_true("B maps I^L onto I^L", "gauge transformations of integrals", IL.image(B) == IL)

    l_gauged = mul(B, pair.l)
    nondegenerate, _, _ = is_nondegenerate(A, l_gauged)
    report.check_true("gauged integral non-degenerate", "gauge transformations of integrals", nondegenerate)
    dist = distinguished(A, pair)
    if nondegenerate:
        gauged = dual_pair(A, l_gauged)
        sigma_gauged = mul(A.dual_right_hit(gauged.l), gauged.lam)
        AhatT = Ahat.trivial_subalgebra
        report.check_true("sigma~ in the coset of sigma", "gauge transformations of integrals",
                          AhatT.contains(Ahat.product(sigma_gauged, dist.sigma.inverse)))
        law = Ahat.product(Ahat.product(mul(T(A.antipode_power(-2)), beta.g), dist.sigma.g), beta.inverse)
        law_inv = Ahat.inverse_of(law)
        report.check_true("S-hat^-2(beta) sigma beta^-1 invertible", "gauge transformations of integrals",
                          law_inv is not None)
        if law_inv is not None:
            report.check_true("sigma~ in the coset of S-hat^-2(beta) sigma beta^-1",
                              "gauge transformations of integrals",
                              AhatT.contains(Ahat.product(sigma_gauged, law_inv)))
    result = unimodularity(A, bound)
    report.extend(result.report, "unimodularity: ")
    report.check_true("unimodular iff sigma is trivial", "gauge transformations of integrals",
                      (result.two_sided is not None) == Ahat.trivial_subalgebra.contains(dist.sigma.g))
    get_logger().info("radford", "radford", "gauge_check", report.summary(), passed=report.passed)
    return report
