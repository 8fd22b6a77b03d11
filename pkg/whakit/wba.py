"""
Weak bialgebras given by structure constants.

A weak bialgebra of dimension n is stored as four sparse matrices over the
field's domain:

    mult    n x n^2   mult[k, i*n + j] = coefficient of e_k in e_i e_j
    unit    n x 1     coefficients of 1
    comult  n^2 x n   comult[j*n + k, i] = coefficient of e_j (x) e_k in Delta(e_i)
    counit  1 x n     epsilon(e_i)

Functionals on A are n x 1 columns in the dual basis. The dual weak
bialgebra is obtained by transposing every structure map.
"""

from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .errors import InputError, WhakitError
from .fields import Field
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport


_DUAL_PREFIX = "dual:"


class Arrow(Enum):
    """The four Sweedler arrows."""
    LEFT_HIT = "phi->a"          # phi -> a = a(1) <phi, a(2)>
    RIGHT_HIT = "a<-phi"         # a <- phi = <phi, a(1)> a(2)
    DUAL_LEFT_HIT = "a->phi"     # <a -> phi, b> = phi(b a)
    DUAL_RIGHT_HIT = "phi<-a"    # <phi <- a, b> = phi(a b)


class Projections(NamedTuple):
    left: Matrix
    right: Matrix
    left_bar: Matrix
    right_bar: Matrix


@dataclass(frozen=True)
class CanonicalSubalgebras:
    """The canonical subalgebras of a weak bialgebra as canonical subspaces."""
    left: Subspace
    right: Subspace
    trivial: Subspace
    left_center: Subspace
    right_center: Subspace
    intersection: Subspace
    hypercenter: Subspace
    center: Subspace


@dataclass(frozen=True, eq=False)
class WeakBialgebra:
    """Finite-dimensional weak bialgebra over an exact field."""
    field: Field
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    basis: Tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        n = self.unit.shape[0]
        expected = {
            "mult": (n, n * n),
            "unit": (n, 1),
            "comult": (n * n, n),
            "counit": (1, n),
        }
        for attr, shape in expected.items():
            m = getattr(self, attr)
            if m.shape != shape:
                raise InputError(f"dimension mismatch: {attr} has shape {m.shape}, expected {shape}",
                                 {"dim": n})
            if m.domain != self.field.domain:
                raise InputError(f"{attr} is not over {self.field}")
            object.__setattr__(self, attr, linalg.sparse(m))
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(n)))
        elif len(self.basis) != n:
            raise InputError(f"dimension mismatch: {len(self.basis)} basis labels for dimension {n}")
        else:
            object.__setattr__(self, "basis", tuple(self.basis))

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_tables(cls, fld: Field, n: int,
                    products: Mapping[Tuple[int, int], Mapping[int, object]],
                    unit: Mapping[int, object],
                    coproducts: Mapping[int, Mapping[Tuple[int, int], object]],
                    counit: Mapping[int, object],
                    basis: Sequence[str] = (), name: str = "", **extra) -> "WeakBialgebra":
        """Build from sparse tables of scalars convertible by ``fld.convert``."""
        K = fld.domain
        mult_rows: Dict[int, Dict[int, object]] = defaultdict(dict)
        for (i, j), out in products.items():
            for k, c in out.items():
                mult_rows[k][i * n + j] = fld.convert(c)
        comult_rows: Dict[int, Dict[int, object]] = defaultdict(dict)
        for i, out in coproducts.items():
            for (j, k), c in out.items():
                comult_rows[j * n + k][i] = fld.convert(c)
        return cls(
            field=fld,
            mult=linalg.from_rows(mult_rows, (n, n * n), K),
            unit=linalg.from_rows({i: {0: fld.convert(c)} for i, c in unit.items()}, (n, 1), K),
            comult=linalg.from_rows(comult_rows, (n * n, n), K),
            counit=linalg.from_rows({0: {i: fld.convert(c) for i, c in counit.items()}}, (1, n), K),
            basis=tuple(basis), name=name, **extra)

    def with_structure(self, **changes) -> "WeakBialgebra":
        """Copy with some structure maps replaced; derived data is recomputed."""
        return replace(self, **changes)

    # ------------------------------------------------------------------
    # basic data
    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @property
    def K(self):
        return self.field.domain

    @cached_property
    def identity(self) -> Matrix:
        return linalg.identity(self.dim, self.K)

    @cached_property
    def flip(self) -> Matrix:
        """The leg swap on A (x) A."""
        return linalg.permute_legs([self.dim, self.dim], [1, 0], self.K)

    def basis_vector(self, i: int) -> Matrix:
        return linalg.unit_vector(self.dim, i, self.K)

    def element(self, values: Sequence[object]) -> Matrix:
        """Column vector from scalars convertible into the field."""
        if len(values) != self.dim:
            raise InputError(f"element has {len(values)} coordinates, expected {self.dim}")
        return linalg.column([self.field.convert(v) for v in values], self.K)

    def check_vector(self, v: Matrix, what: str = "element") -> Matrix:
        if v.shape != (self.dim, 1):
            raise InputError(f"dimension mismatch: {what} has shape {v.shape}, expected ({self.dim}, 1)")
        return v

    @cached_property
    def _mult_table(self) -> Dict[Tuple[int, int], Dict[int, object]]:
        n = self.dim
        table = {}
        for col, out in linalg.transpose(self.mult).rep.items():
            table[divmod(col, n)] = dict(out)
        return table

    # ------------------------------------------------------------------
    # algebra
    # ------------------------------------------------------------------

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        return linalg.mul(self.mult, linalg.kron(x, y))

    def product_terms(self, i: int, j: int) -> Dict[int, object]:
        """Nonzero structure constants {k: c} of e_i e_j."""
        return self._mult_table.get((i, j), {})

    def left_mult(self, x: Matrix) -> Matrix:
        """L_x : a -> x a."""
        return linalg.mul(self.mult, linalg.kron(x, self.identity))

    def right_mult(self, x: Matrix) -> Matrix:
        """R_x : a -> a x."""
        return linalg.mul(self.mult, linalg.kron(self.identity, x))

    def coproduct(self, x: Matrix) -> Matrix:
        return linalg.mul(self.comult, x)

    def counit_of(self, x: Matrix):
        return linalg.scalar(linalg.mul(self.counit, x))

    def pair(self, phi: Matrix, x: Matrix):
        """Canonical pairing <phi, x>."""
        return linalg.scalar(linalg.mul(linalg.transpose(phi), x))

    def inverse_of(self, x: Matrix) -> Optional[Matrix]:
        """Two-sided inverse of x in A, or None."""
        left = linalg.solve(self.right_mult(x), self.unit)
        if not left.consistent:
            return None
        y = left.particular
        if not linalg.equal(self.product(x, y), self.unit):
            return None
        return y

    def tensor_multiply(self, x: Matrix, y: Matrix, legs: int) -> Matrix:
        """Product of two vectors of the tensor power A^(x legs)."""
        n, K = self.dim, self.K
        dims = [n] * legs
        table = self._mult_table
        out: Dict[int, object] = defaultdict(lambda: K.zero)
        for I, xr in x.rep.items():
            I_legs = linalg.decode_index(I, dims)
            for J, yr in y.rep.items():
                J_legs = linalg.decode_index(J, dims)
                partial = {0: xr[0] * yr[0]}
                for t in range(legs):
                    prod = table.get((I_legs[t], J_legs[t]))
                    if not prod:
                        partial = {}
                        break
                    nxt: Dict[int, object] = defaultdict(lambda: K.zero)
                    for idx, c in partial.items():
                        for k, v in prod.items():
                            nxt[idx * n + k] += c * v
                    partial = nxt
                for idx, c in partial.items():
                    out[idx] += c
        return linalg.from_rows({i: {0: c} for i, c in out.items()}, (n ** legs, 1), K)

    # ------------------------------------------------------------------
    # coalgebra and arrows
    # ------------------------------------------------------------------

    @cached_property
    def delta_one(self) -> Matrix:
        return self.coproduct(self.unit)

    @cached_property
    def delta_one_matrix(self) -> Matrix:
        """C with C[j, k] the coefficient of e_j (x) e_k in Delta(1)."""
        return linalg.reshape(self.delta_one, self.dim, self.dim)

    @cached_property
    def counit_form(self) -> Matrix:
        """E with E[i, j] = epsilon(e_i e_j)."""
        return linalg.reshape(linalg.transpose(linalg.mul(self.counit, self.mult)), self.dim, self.dim)

    def tensor_terms(self, v: Matrix) -> List[Tuple[int, int, object]]:
        """Nonzero (j, k, c) with v = sum c e_j (x) e_k, in index order."""
        n = self.dim
        return sorted(divmod(idx, n) + (r[0],) for idx, r in v.rep.items())

    def delta_one_terms(self) -> List[Tuple[int, int, object]]:
        return self.tensor_terms(self.delta_one)

    def sandwich(self, left, right) -> Matrix:
        """sum_{j,k} C[j,k] kron(left(j), right(k)) over the terms of Delta(1)."""
        return self.contract(self.delta_one, left, right)

    def contract(self, v: Matrix, left, right) -> Matrix:
        """sum c kron(left(j), right(k)) over the terms c e_j (x) e_k of v."""
        total = None
        for j, k, c in self.tensor_terms(v):
            term = linalg.scale(linalg.kron(left(j), right(k)), c)
            total = term if total is None else linalg.add(total, term)
        if total is None:
            a, b = left(0), right(0)
            return linalg.zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1], self.K)
        return total

    def left_hit(self, phi: Matrix) -> Matrix:
        """Matrix of a -> phi -> a."""
        return linalg.mul(linalg.kron(self.identity, linalg.transpose(phi)), self.comult)

    def right_hit(self, phi: Matrix) -> Matrix:
        """Matrix of a -> a <- phi."""
        return linalg.mul(linalg.kron(linalg.transpose(phi), self.identity), self.comult)

    def dual_left_hit(self, a: Matrix) -> Matrix:
        """Matrix of phi -> a -> phi."""
        return linalg.transpose(self.right_mult(a))

    def dual_right_hit(self, a: Matrix) -> Matrix:
        """Matrix of phi -> phi <- a."""
        return linalg.transpose(self.left_mult(a))

    @property
    def dual_unit(self) -> Matrix:
        """1-hat, i.e. the counit as a functional."""
        return linalg.transpose(self.counit)

    def dual_product(self, phi: Matrix, psi: Matrix) -> Matrix:
        return linalg.mul(linalg.transpose(self.comult), linalg.kron(phi, psi))

    def kappa_left(self, x: Matrix) -> Matrix:
        """x -> 1-hat, sends A^L to the right subalgebra of the dual."""
        return linalg.mul(self.dual_left_hit(x), self.dual_unit)

    def kappa_right(self, x: Matrix) -> Matrix:
        """1-hat <- x, sends A^R to the left subalgebra of the dual."""
        return linalg.mul(self.dual_right_hit(x), self.dual_unit)

    # ------------------------------------------------------------------
    # projections and subalgebras
    # ------------------------------------------------------------------

    @cached_property
    def projections(self) -> Projections:
        C, E = self.delta_one_matrix, self.counit_form
        Ct, Et = linalg.transpose(C), linalg.transpose(E)
        return Projections(
            left=linalg.mul(Ct, E),
            right=linalg.mul(C, Et),
            left_bar=linalg.mul(Ct, Et),
            right_bar=linalg.mul(C, E),
        )

    @cached_property
    def left_subalgebra(self) -> Subspace:
        return linalg.image(self.projections.left)

    @cached_property
    def right_subalgebra(self) -> Subspace:
        return linalg.image(self.projections.right)

    @cached_property
    def center(self) -> Subspace:
        blocks = [linalg.sub(self.left_mult(self.basis_vector(i)), self.right_mult(self.basis_vector(i)))
                  for i in range(self.dim)]
        return linalg.kernel(linalg.vstack(*blocks))

    @cached_property
    def trivial_subalgebra(self) -> Subspace:
        """A^T, the multiplicative closure of A^L and A^R."""
        current = self.left_subalgebra + self.right_subalgebra
        for _ in range(self.dim + 1):
            vectors = current.vectors()
            products = [self.product(x, y) for x in vectors for y in vectors]
            grown = current + Subspace.span(products, self.dim, self.K)
            if grown.dim == current.dim:
                return current
            current = grown
        raise WhakitError("trivial subalgebra closure did not stabilize", {"dim": self.dim})

    def dual(self) -> "WeakBialgebra":
        return WeakBialgebra(
            field=self.field,
            mult=linalg.transpose(self.comult),
            unit=linalg.transpose(self.counit),
            comult=linalg.transpose(self.mult),
            counit=linalg.transpose(self.unit),
            basis=tuple(_dual_label(b) for b in self.basis),
            name=_dual_label(self.name) if self.name else "",
        )

    @cached_property
    def dualized(self) -> "WeakBialgebra":
        return self.dual()

    def describe(self) -> Dict[str, object]:
        return {"name": self.name, "dim": self.dim, "field": str(self.field)}


def _dual_label(label: str) -> str:
    if label.startswith(_DUAL_PREFIX):
        return label[len(_DUAL_PREFIX):]
    return _DUAL_PREFIX + label


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------

def dualize(A: WeakBialgebra) -> WeakBialgebra:
    """The dual weak bialgebra (weak Hopf algebra if A carries an antipode)."""
    return A.dualized


def projections(A: WeakBialgebra) -> Projections:
    return A.projections


def sweedler(A: WeakBialgebra, arrow: Arrow, x: Matrix, y: Matrix) -> Matrix:
    """
    Evaluate a Sweedler arrow.

    Args:
        A: the weak bialgebra both operands belong to
        arrow: which arrow; operands are given in written order
            (``phi -> a`` is ``sweedler(A, Arrow.LEFT_HIT, phi, a)``)
        x, y: the two operands

    Raises:
        InputError: on a dimension mismatch
    """
    A.check_vector(x, "left operand")
    A.check_vector(y, "right operand")
    if arrow is Arrow.LEFT_HIT:
        return linalg.mul(A.left_hit(x), y)
    if arrow is Arrow.RIGHT_HIT:
        return linalg.mul(A.right_hit(y), x)
    if arrow is Arrow.DUAL_LEFT_HIT:
        return linalg.mul(A.dual_left_hit(x), y)
    return linalg.mul(A.dual_right_hit(y), x)


def canonical_subalgebras(A: WeakBialgebra) -> CanonicalSubalgebras:
    left, right, center = A.left_subalgebra, A.right_subalgebra, A.center
    intersection = left.intersection(right)
    return CanonicalSubalgebras(
        left=left,
        right=right,
        trivial=A.trivial_subalgebra,
        left_center=left.intersection(center),
        right_center=right.intersection(center),
        intersection=intersection,
        hypercenter=intersection.intersection(center),
        center=center,
    )


def check_wba(A: WeakBialgebra) -> AxiomReport:
    """Algebra, coalgebra and weak bialgebra compatibility axioms."""
    logger = get_logger()
    logger.debug("wba", "wba", "check_wba", "checking weak bialgebra axioms", **A.describe())
    n, M, D, u, eps, I = A.dim, A.mult, A.comult, A.unit, A.counit, A.identity
    report = AxiomReport("wba")
    kron, mul = linalg.kron, linalg.mul

    report.check_equal("associativity", "algebra axioms",
                       mul(M, kron(M, I)), mul(M, kron(I, M)), [n, n, n])
    report.check_equal("unit (left)", "algebra axioms", mul(M, kron(u, I)), I, [n])
    report.check_equal("unit (right)", "algebra axioms", mul(M, kron(I, u)), I, [n])
    report.check_equal("coassociativity", "coalgebra axioms",
                       mul(kron(D, I), D), mul(kron(I, D), D), [n])
    report.check_equal("counit (left)", "coalgebra axioms", mul(kron(eps, I), D), I, [n])
    report.check_equal("counit (right)", "coalgebra axioms", mul(kron(I, eps), D), I, [n])

    products = [A.tensor_multiply(A.coproduct(A.basis_vector(i)), A.coproduct(A.basis_vector(j)), 2)
                for i in range(n) for j in range(n)]
    report.check_equal("coproduct multiplicative", "weak bialgebra: multiplicativity of the coproduct",
                       mul(D, M), linalg.hstack(*products), [n, n])

    epsM = mul(eps, M)
    lhs = mul(epsM, kron(M, I))
    report.check_equal("counit weak multiplicativity (b2 b1 order)",
                       "weak bialgebra: weak multiplicativity of the counit",
                       lhs, mul(kron(epsM, epsM), kron(I, D, I)), [n, n, n])
    report.check_equal("counit weak multiplicativity (b1 b2 order)",
                       "weak bialgebra: weak multiplicativity of the counit",
                       lhs, mul(kron(epsM, epsM), kron(I, mul(A.flip, D), I)), [n, n, n])

    d1 = A.delta_one
    double = mul(kron(D, I), d1)
    first = linalg.kron(d1, u)
    second = linalg.kron(u, d1)
    report.check_equal("unit weak comultiplicativity (left factor first)",
                       "weak bialgebra: weak comultiplicativity of the unit",
                       double, A.tensor_multiply(first, second, 3), [n, n, n])
    report.check_equal("unit weak comultiplicativity (right factor first)",
                       "weak bialgebra: weak comultiplicativity of the unit",
                       double, A.tensor_multiply(second, first, 3), [n, n, n])
    logger.info("wba", "wba", "check_wba", report.summary(), passed=report.passed)
    return report


def check_wba_identities(A: WeakBialgebra) -> AxiomReport:
    """Identities every weak bialgebra satisfies beyond its axioms."""
    logger = get_logger()
    n, D, I = A.dim, A.comult, A.identity
    kron, mul, T = linalg.kron, linalg.mul, linalg.transpose
    report = AxiomReport("wba-identities")
    P = A.projections
    AL, AR = A.left_subalgebra, A.right_subalgebra
    Dt = T(D)

    report.check_equal("left projection idempotent", "canonical projections", mul(P.left, P.left), P.left, [n])
    report.check_equal("right projection idempotent", "canonical projections", mul(P.right, P.right), P.right, [n])
    report.check_true("left projections share their image", "canonical projections",
                      linalg.image(P.left_bar) == AL)
    report.check_true("right projections share their image", "canonical projections",
                      linalg.image(P.right_bar) == AR)
    report.check_true("unit in left subalgebra", "canonical projections", AL.contains(A.unit))
    report.check_true("unit in right subalgebra", "canonical projections", AR.contains(A.unit))

    for t, x in enumerate(AL.vectors()):
        report.check_equal(f"coproduct on left subalgebra [{t}]", "coproduct on A^L",
                           A.coproduct(x), mul(kron(A.right_mult(x), I), A.delta_one), [n, n])
        kappa = A.kappa_left(x)
        report.check_equal(f"left element hits functional [{t}]", "arrows by A^L and A^R",
                           A.dual_left_hit(x), mul(Dt, kron(kappa, I)), [n])
        report.check_equal(f"functional hit by left element [{t}]", "arrows by A^L and A^R",
                           A.dual_right_hit(x), mul(Dt, kron(A.kappa_right(x), I)), [n])
    for t, x in enumerate(AR.vectors()):
        report.check_equal(f"coproduct on right subalgebra [{t}]", "coproduct on A^R",
                           A.coproduct(x), mul(kron(I, A.left_mult(x)), A.delta_one), [n, n])
        report.check_equal(f"right element hits functional [{t}]", "arrows by A^L and A^R",
                           A.dual_left_hit(x), mul(Dt, kron(I, A.kappa_left(x))), [n])
        report.check_equal(f"functional hit by right element [{t}]", "arrows by A^L and A^R",
                           A.dual_right_hit(x), mul(Dt, kron(I, A.kappa_right(x))), [n])
        for s, y in enumerate(AL.vectors()):
            report.check_equal(f"left and right subalgebras commute [{s},{t}]", "A^L and A^R commute",
                               A.product(y, x), A.product(x, y))

    report.check_true("unit coproduct in right (x) left", "Delta(1) in A^R (x) A^L",
                      Subspace.from_columns(kron(AR.basis, AL.basis)).contains(A.delta_one)
                      if AL.dim and AR.dim else False)

    Ahat = dualize(A)
    PH = Ahat.projections
    AhatR = Ahat.right_subalgebra
    for t, x in enumerate(AL.vectors()):
        kappa = A.kappa_left(x)
        report.check_true(f"kappa_L lands in dual right subalgebra [{t}]", "kappa isomorphisms",
                          AhatR.contains(kappa))
        back = mul(A.right_hit(kappa), A.unit)
        report.check_equal(f"kappa_L inverted by 1 <- (.) [{t}]", "kappa isomorphisms", back, x)

    report.check_equal("dual left projection is transpose", "transposition of projections",
                       PH.left, T(P.left), [n])
    report.check_equal("dual right projection is transpose", "transposition of projections",
                       PH.right, T(P.right), [n])
    report.check_equal("dual right bar projection is transpose of left bar", "transposition of projections",
                       PH.right_bar, T(P.left_bar), [n])
    report.check_equal("dual left bar projection is transpose of right bar", "transposition of projections",
                       PH.left_bar, T(P.right_bar), [n])

    e = A.basis_vector
    report.check_equal("right projection on first leg", "projections on coproduct legs",
                       mul(kron(P.right, I), D), A.sandwich(e, lambda k: A.right_mult(e(k))), [n])
    report.check_equal("left projection on second leg", "projections on coproduct legs",
                       mul(kron(I, P.left), D), A.sandwich(lambda j: A.left_mult(e(j)), e), [n])
    report.check_equal("right bar projection on first leg", "projections on coproduct legs",
                       mul(kron(P.right_bar, I), D), A.sandwich(e, lambda k: A.left_mult(e(k))), [n])
    report.check_equal("left bar projection on second leg", "projections on coproduct legs",
                       mul(kron(I, P.left_bar), D), A.sandwich(lambda j: A.right_mult(e(j)), e), [n])

    for hat_name, hat_space in (("L", Ahat.left_subalgebra), ("R", AhatR)):
        for name, space in (("L", AL), ("R", AR)):
            if hat_space.dim == 0 or space.dim == 0:
                ok = False
            else:
                pairing = mul(T(hat_space.basis), space.basis)
                ok = linalg.rank(pairing) == hat_space.dim == space.dim
            report.check_true(f"pairing dual {hat_name} x {name} non-degenerate",
                              "restricted pairings", ok)
    logger.info("wba", "wba", "check_wba_identities", report.summary(), passed=report.passed)
    return report
