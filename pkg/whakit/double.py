"""
The Drinfeld double D(A) of a weak Hopf algebra.

D(A) is the quotient of A (x) Ahat by the relations

    a x_L x_R (x) phi  ~  a (x) (x_L -> 1-hat)(1-hat <- x_R) phi

realized as the image of the idempotent

    P(b (x) psi) = b 1(1) S(1(1')) (x) (1(2') -> 1-hat)(1-hat <- S(1(2))) psi.

Structure maps are evaluated on tensor representatives and pushed to
coordinates of the quotient; each one is certified to factor through P.
The multiplication

    D(a (x) phi) D(b (x) psi) = D(a b(2) (x) phi(2) psi) <x(1), S-hat^-1(phi(3))> <x(3), phi(1)>

has two readings, x = b (legs of b paired with phi) and x = a (legs of a,
with a(2) b in the product). The axiom suite decides which one is used.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from . import linalg
from .errors import DoubleConstructionError, InputError
from .integrals import DualPair, Side, hat_left, hit_map, integral_space, is_nondegenerate
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import check_wba, dualize
from .wha import WeakHopfAlgebra, as_weak_hopf, check_wha

Terms = Dict[int, object]


class Reading(Enum):
    """Which factor's coproduct legs are paired with phi(1) and phi(3)."""
    B_LEGS = "b-legs"
    LITERAL = "literal"


@dataclass(frozen=True, eq=False)
class DoubleAlgebra:
    """
    D(A) in the coordinates of representative tensors.

    ``representatives`` are ambient indices a*n + phi of A (x) Ahat whose
    classes form the basis of D(A); ``quotient`` sends an ambient tensor to
    the coordinates of its class.
    """
    parent: WeakHopfAlgebra
    reading: Reading
    projection: Matrix
    relations: Subspace
    space: Subspace
    representatives: Tuple[int, ...]
    quotient: Matrix
    algebra: Optional[WeakHopfAlgebra]
    integral: Optional[Matrix]
    report: AxiomReport = field(repr=False)

    @property
    def dim(self) -> int:
        return self.space.dim

    def element(self, a: Matrix, phi: Matrix) -> Matrix:
        """Coordinates of the class D(a (x) phi)."""
        return linalg.mul(self.quotient, linalg.kron(a, phi))


def _column_terms(m: Matrix) -> Dict[int, Terms]:
    return {j: dict(col) for j, col in linalg.transpose(m).rep.items()}


def _terms_to_column(terms: Terms, length: int, K) -> Matrix:
    return linalg.from_rows({i: {0: c} for i, c in terms.items() if c}, (length, 1), K)


class _Ambient:
    """Structure maps of D(A) evaluated on A (x) Ahat, with caches per basis tensor."""

    def __init__(self, A: WeakHopfAlgebra, reading: Reading):
        self.A = A
        self.Ahat = dualize(A)
        self.reading = reading
        self.n = A.dim
        self.K = A.K
        n = self.n
        self._comult = _column_terms(A.comult)
        self._dual_comult = _column_terms(self.Ahat.comult)
        self._double_coproduct = _column_terms(linalg.mul(linalg.kron(A.comult, A.identity), A.comult))
        self._twists: Dict[Tuple[int, int], Dict[int, Terms]] = {}
        self._products: Dict[Tuple[int, int], Terms] = {}
        self._dims3 = [n, n, n]

    def _twist(self, i: int, l: int) -> Dict[int, Terms]:
        """Columns of phi -> S^-1(e_i) -> phi <- e_l."""
        key = (i, l)
        if key not in self._twists:
            A = self.A
            H = linalg.mul(A.dual_left_hit(linalg.mul(A.S_inv, A.basis_vector(i))),
                           A.dual_right_hit(A.basis_vector(l)))
            self._twists[key] = _column_terms(H)
        return self._twists[key]

    def basis_product(self, s: int, t: int) -> Terms:
        """Product of the basis tensors with ambient indices s and t."""
        key = (s, t)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        n, K = self.n, self.K
        a, phi = divmod(s, n)
        b, psi = divmod(t, n)
        legs_of = b if self.reading is Reading.B_LEGS else a
        out: Terms = defaultdict(lambda: K.zero)
        for idx, c in self._double_coproduct.get(legs_of, {}).items():
            i, k, l = linalg.decode_index(idx, self._dims3)
            if self.reading is Reading.B_LEGS:
                left = self.A.product_terms(a, k)
            else:
                left = self.A.product_terms(k, b)
            if not left:
                continue
            for m, h in self._twist(i, l).get(phi, {}).items():
                for r, v in self.Ahat.product_terms(m, psi).items():
                    weight = c * h * v
                    for x, w in left.items():
                        out[x * n + r] += weight * w
        result = {idx: c for idx, c in out.items() if c}
        self._products[key] = result
        return result

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        out: Terms = defaultdict(lambda: self.K.zero)
        for s, xr in x.rep.items():
            for t, yr in y.rep.items():
                for idx, c in self.basis_product(s, t).items():
                    out[idx] += xr[0] * yr[0] * c
        return _terms_to_column(out, self.n * self.n, self.K)

    def coproduct_matrix(self, s: int) -> Matrix:
        """Delta(a (x) phi) = (a(1) (x) phi(2)) (x) (a(2) (x) phi(1)) reshaped to n^2 x n^2."""
        n = self.n
        a, phi = divmod(s, n)
        rows: Dict[int, Dict[int, object]] = defaultdict(dict)
        for idx, c in self._comult.get(a, {}).items():
            j, k = divmod(idx, n)
            for jdx, c2 in self._dual_comult.get(phi, {}).items():
                p, q = divmod(jdx, n)
                row, col = j * n + q, k * n + p
                rows[row][col] = rows[row].get(col, self.K.zero) + c * c2
        return linalg.from_rows(rows, (n * n, n * n), self.K)

    def counit_row(self) -> Matrix:
        """epsilon(a (phi -> 1)) for every basis tensor."""
        A, n = self.A, self.n
        values = {}
        for phi in range(n):
            hit_one = linalg.mul(A.left_hit(A.basis_vector(phi)), A.unit)
            row = linalg.mul(A.counit, A.right_mult(hit_one))
            for a, c in row.rep.get(0, {}).items():
                values[a * n + phi] = c
        return linalg.from_rows({0: values}, (1, n * n), self.K)

    def unit(self) -> Matrix:
        return linalg.kron(self.A.unit, self.A.dual_unit)

    def antipode_column(self, s: int) -> Matrix:
        """S(a (x) phi) = (1 (x) S-hat^-1(phi)) (S(a) (x) 1-hat)."""
        A, n = self.A, self.n
        a, phi = divmod(s, n)
        left = linalg.kron(A.unit, linalg.mul(linalg.transpose(A.S_inv), A.basis_vector(phi)))
        right = linalg.kron(linalg.mul(A.S, A.basis_vector(a)), A.dual_unit)
        return self.product(left, right)


def double_projection(A: WeakHopfAlgebra) -> Matrix:
    """
    The idempotent P on A (x) Ahat, assembled as a product of two sums
    over Delta(1).
    """
    A = as_weak_hopf(A)
    Ahat = dualize(A)
    mul = linalg.mul
    outer = A.sandwich(lambda j: A.right_mult(mul(A.S, A.basis_vector(j))),
                       lambda k: Ahat.left_mult(A.kappa_left(A.basis_vector(k))))
    inner = A.sandwich(lambda j: A.right_mult(A.basis_vector(j)),
                       lambda k: Ahat.left_mult(A.kappa_right(mul(A.S, A.basis_vector(k)))))
    return mul(outer, inner)


def dual_double_projection(A: WeakHopfAlgebra) -> Matrix:
    """
    P-hat(phi (x) a) = (1(1') -> 1-hat) phi (1(1) -> 1-hat) (x) 1(2) a 1(2') on Ahat (x) A.
    """
    A = as_weak_hopf(A)
    Ahat = dualize(A)
    mul = linalg.mul
    outer = A.sandwich(lambda j: Ahat.left_mult(A.kappa_left(A.basis_vector(j))),
                       lambda k: A.right_mult(A.basis_vector(k)))
    inner = A.sandwich(lambda j: Ahat.right_mult(A.kappa_left(A.basis_vector(j))),
                       lambda k: A.left_mult(A.basis_vector(k)))
    return mul(outer, inner)


def relation_space(A: WeakHopfAlgebra) -> Subspace:
    """Span of a x (x) phi - a (x) (x -> 1-hat) phi and a y (x) phi - a (x) (1-hat <- y) phi."""
    A = as_weak_hopf(A)
    Ahat = dualize(A)
    kron = linalg.kron
    blocks = []
    for x in A.left_subalgebra.vectors():
        blocks.append(linalg.sub(kron(A.right_mult(x), A.identity),
                                 kron(A.identity, Ahat.left_mult(A.kappa_left(x)))))
    for y in A.right_subalgebra.vectors():
        blocks.append(linalg.sub(kron(A.right_mult(y), A.identity),
                                 kron(A.identity, Ahat.left_mult(A.kappa_right(y)))))
    return linalg.image(linalg.hstack(*blocks))


def _assemble(A: WeakHopfAlgebra, pair: DualPair, reading: Reading) -> DoubleAlgebra:
    """Build D(A) under one reading; every failure ends up in the report."""
    logger = get_logger()
    A = as_weak_hopf(A)
    n, K = A.dim, A.K
    nn = n * n
    mul = linalg.mul
    report = AxiomReport("double")

    P = double_projection(A)
    N = relation_space(A)
    space = linalg.image(P)
    d = space.dim
    identity = linalg.identity(nn, K)
    report.check_equal("P idempotent", "projection onto the double", mul(P, P), P, [n, n])
    report.check_true("P kills the relations", "projection onto the double",
                      N.dim == 0 or linalg.is_zero(mul(P, N.basis)))
    report.check_true("relations span the kernel of P", "projection onto the double",
                      N.contains_all(linalg.sub(identity, P)) and d == nn - N.dim,
                      detail=f"rank P = {d}, relations = {N.dim}")

    Q0 = space.coordinate_matrix(P)
    reps = tuple(linalg.pivots(Q0))[:d]
    Q = mul(linalg.inverse(Q0.extract(list(range(d)), list(reps))), Q0)
    logger.debug("double", "double", "_assemble", "quotient fixed", dim=d, reading=reading.value)

    amb = _Ambient(A, reading)
    mult_cols: Dict[int, Matrix] = {}
    for j, t in enumerate(reps):
        left_action = mul(Q, linalg.hstack(*[_terms_to_column(amb.basis_product(s, t), nn, K)
                                             for s in range(nn)]))
        report.check_equal(f"product well defined in the first factor [{j}]", "structure maps of the double",
                           mul(left_action, P), left_action, [n, n])
        for i, s in enumerate(reps):
            mult_cols[i * d + j] = linalg.column_of(left_action, s)
    for i, s in enumerate(reps):
        right_action = mul(Q, linalg.hstack(*[_terms_to_column(amb.basis_product(s, t), nn, K)
                                              for t in range(nn)]))
        report.check_equal(f"product well defined in the second factor [{i}]", "structure maps of the double",
                           mul(right_action, P), right_action, [n, n])

    QT = linalg.transpose(Q)
    coproducts = [linalg.flatten(mul(Q, amb.coproduct_matrix(s), QT)) for s in range(nn)]
    comult_amb = linalg.hstack(*coproducts)
    report.check_equal("coproduct well defined", "structure maps of the double",
                       mul(comult_amb, P), comult_amb, [n, n])
    counit_amb = amb.counit_row()
    report.check_equal("counit well defined", "structure maps of the double",
                       mul(counit_amb, P), counit_amb, [n, n])

    Ahat = dualize(A)
    labels = tuple(f"{A.basis[s // n]}#{Ahat.basis[s % n]}" for s in reps)
    mult = linalg.hstack(*[mult_cols[k] for k in range(d * d)])
    extract = list(reps)
    D = WeakHopfAlgebra(
        field=A.field,
        mult=mult,
        unit=mul(Q, amb.unit()),
        comult=comult_amb.extract(list(range(d * d)), extract),
        counit=counit_amb.extract([0], extract),
        basis=labels,
        name=f"D({A.name})" if A.name else "D",
        antipode=linalg.hstack(*[mul(Q, amb.antipode_column(s)) for s in reps]),
    )
    report.extend(check_wba(D), "wba: ")
    report.extend(check_wha(D), "wha: ")

    integral = mul(Q, linalg.kron(pair.l, mul(linalg.transpose(A.S), pair.lam)))
    report.check_true("D(l (x) S-hat(lambda)) is a left integral", "the double is unimodular",
                      integral_space(D, Side.LEFT).contains(integral))
    report.check_true("D(l (x) S-hat(lambda)) is a right integral", "the double is unimodular",
                      integral_space(D, Side.RIGHT).contains(integral))
    report.check_true("D(l (x) S-hat(lambda)) non-degenerate", "the double is unimodular",
                      is_nondegenerate(D, integral)[0])
    logger.info("double", "double", "_assemble", report.summary(), passed=report.passed,
                reading=reading.value, dim=d)
    return DoubleAlgebra(A, reading, P, N, space, reps, Q, D, integral, report)


def build_double(A: WeakHopfAlgebra, pair: DualPair, reading: Union[str, Reading] = "auto") -> DoubleAlgebra:
    """
    Construct D(A) and certify it.

    Args:
        reading: "b-legs", "literal" or "auto"; "auto" tries the b-leg
            reading first and falls back to the literal one

    Raises:
        InputError: on an unknown reading
        DoubleConstructionError: if no tried reading yields a weak Hopf algebra
    """
    A = as_weak_hopf(A)
    if reading == "auto":
        order: List[Reading] = [Reading.B_LEGS, Reading.LITERAL]
    else:
        try:
            order = [Reading(reading)]
        except ValueError as exc:
            raise InputError(f"unknown multiplication reading {reading!r}") from exc
    reports = []
    for candidate in order:
        double = _assemble(A, pair, candidate)
        if double.report.passed:
            double.report.check_true(f"reading selected: {candidate.value}", "structure maps of the double", True)
            return double
        reports.append(double.report)
        get_logger().warning("double", "double", "build_double", "reading rejected by the axiom suite",
                             reading=candidate.value, failures=len(double.report.failures))
    raise DoubleConstructionError("no multiplication reading yields a weak Hopf algebra", reports,
                                  {"readings": ", ".join(r.value for r in order)})


def compare_double_readings(A: WeakHopfAlgebra, pair: DualPair) -> Dict[str, AxiomReport]:
    """Both readings side by side; never raises on failing suites."""
    return {r.value: _assemble(A, pair, r).report for r in Reading}


def double_integral_certificate(double: DoubleAlgebra, pair: DualPair) -> AxiomReport:
    """
    Non-degeneracy of D(l (x) S-hat(lambda)) through the dual double: the map
    phi (x) a -> D((R_l (x) L-hat_{S-hat(lambda)})(P-hat(phi (x) a))), valued in
    D(A), has rank dim D, so hitting the integral is injective on D-hat. The
    integral identities are checked on every basis element of D.
    """
    A = double.parent
    D = double.algebra
    mul = linalg.mul
    report = AxiomReport("double-integral")
    P_hat = dual_double_projection(A)
    rank_hat = linalg.rank(P_hat)
    sweedler = linalg.kron(hit_map(A, pair.l), hat_left(A, mul(linalg.transpose(A.S), pair.lam)))
    rank_in_double = linalg.rank(mul(double.quotient, sweedler, P_hat))
    report.check_true("rank P-hat = dim D", "non-degeneracy through the dual double", rank_hat == double.dim,
                      detail=f"rank P-hat = {rank_hat}, dim D = {double.dim}")
    report.check_true("Sweedler map into D injective on D-hat", "non-degeneracy through the dual double",
                      rank_in_double == double.dim,
                      detail=f"rank in D = {rank_in_double}, dim D = {double.dim}")
    if D is not None and double.integral is not None:
        proj = D.projections
        R, L = D.right_mult(double.integral), D.left_mult(double.integral)
        report.check_equal("a l_D = Pi^L(a) l_D", "the double is unimodular", R, mul(R, proj.left), [D.dim])
        report.check_equal("l_D a = l_D Pi^R(a)", "the double is unimodular", L, mul(L, proj.right), [D.dim])
    get_logger().info("double", "double", "double_integral_certificate", report.summary(), passed=report.passed)
    return report
