"""
Finite-dimensional left modules of a weak Hopf algebra.

A module is a tuple of action matrices, one per basis element of the
algebra. Product modules live on the image of the projector Delta(1) acting
on M (x) N and remember that subspace, so maps between products can be
written once on the ambient tensor space and restricted.

Right modules are handled through the antipode, m . a := S(a) . m, and are
not represented separately.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from sympy import Symbol

from . import linalg
from .errors import CriterionUnavailable, InputError, WhakitError
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import WeakBialgebra
from .wha import WeakHopfAlgebra, as_weak_hopf


_X = Symbol("x")


@dataclass(frozen=True, eq=False)
class LeftModule:
    """A left module given by the action matrices rho(e_i)."""
    algebra: WeakBialgebra
    action: Tuple[Matrix, ...]
    name: str = ""
    space: Optional[Subspace] = None

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise InputError(f"module has {len(self.action)} action matrices, "
                             f"algebra has dimension {self.algebra.dim}")
        sizes = {m.shape for m in self.action}
        if len(sizes) != 1 or len(set(next(iter(sizes)))) != 1:
            raise InputError(f"action matrices must be square of one size, got {sorted(sizes)}")
        object.__setattr__(self, "action", tuple(linalg.sparse(m) for m in self.action))

    @property
    def dim(self) -> int:
        return self.action[0].shape[0]

    @property
    def K(self):
        return self.algebra.K

    @cached_property
    def identity(self) -> Matrix:
        return linalg.identity(self.dim, self.K)

    def act(self, x: Matrix) -> Matrix:
        """rho(x) for an arbitrary element x."""
        self.algebra.check_vector(x)
        total = linalg.zeros(self.dim, self.dim, self.K)
        for i, row in x.rep.items():
            total = linalg.add(total, linalg.scale(self.action[i], row[0]))
        return total

    @property
    def embedding(self) -> Optional[Matrix]:
        """Basis of the module inside the tensor space it was cut out of."""
        return self.space.basis if self.space is not None else None


@dataclass(frozen=True)
class ModuleMap:
    source: LeftModule
    target: LeftModule
    matrix: Matrix

    def is_module_map(self) -> bool:
        if self.matrix is None or self.matrix.shape != (self.target.dim, self.source.dim):
            return False
        return all(linalg.equal(linalg.mul(self.matrix, s), linalg.mul(t, self.matrix))
                   for s, t in zip(self.source.action, self.target.action))


@dataclass(frozen=True)
class UnitConstraints:
    left: ModuleMap
    left_inverse: ModuleMap
    right: ModuleMap
    right_inverse: ModuleMap
    report: AxiomReport


@dataclass(frozen=True)
class Conjugates:
    left: LeftModule
    right: LeftModule
    report: AxiomReport


@dataclass(frozen=True)
class ModuleClass:
    """The summand z_p^L z_q^R . M, as a subspace of M."""
    p: int
    q: int
    space: Subspace


@dataclass(frozen=True)
class ClassDecomposition:
    split: bool
    idempotents: List[Matrix]
    classes: List[ModuleClass]
    report: AxiomReport


@dataclass(frozen=True)
class InvertibilityVerdict:
    invertible: bool
    left_generator: Optional[Matrix]
    right_generator: Optional[Matrix]
    report: AxiomReport


@dataclass(frozen=True)
class RadicalCheck:
    annihilates: bool
    radical: Subspace


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------

def restrict_action(A: WeakBialgebra, ambient: Sequence[Matrix], space: Subspace, name: str = "") -> LeftModule:
    """
    The submodule on an invariant subspace of an ambient action.

    Raises:
        WhakitError: if the subspace is not invariant
    """
    action = []
    for i, m in enumerate(ambient):
        coords = space.coordinate_matrix(linalg.mul(m, space.basis))
        if coords is None:
            raise WhakitError(f"subspace of {name or 'module'} is not invariant under e{i}")
        action.append(coords)
    if space.dim == 0:
        raise InputError(f"{name or 'module'} is zero-dimensional")
    return LeftModule(A, tuple(action), name, space)


def regular_module(A: WeakBialgebra) -> LeftModule:
    return LeftModule(A, tuple(A.left_mult(A.basis_vector(i)) for i in range(A.dim)), "regular")


def unit_module(A: WeakBialgebra) -> LeftModule:
    """A^L with a . x = Pi^L(a x)."""
    P = A.projections
    ambient = [linalg.mul(P.left, A.left_mult(A.basis_vector(i))) for i in range(A.dim)]
    return restrict_action(A, ambient, A.left_subalgebra, "unit")


def module_from_matrices(A: WeakBialgebra, matrices: Sequence[Sequence[Sequence[object]]],
                         name: str = "") -> LeftModule:
    """Module from nested lists of scalars, one matrix per basis element of A."""
    return LeftModule(A, tuple(linalg.matrix([[A.field.convert(c) for c in row] for row in m], A.K)
                               for m in matrices), name)


def _pivot_extraction(space: Subspace) -> Matrix:
    """Left inverse of space.basis reading off RREF coordinates."""
    K = space.domain
    return linalg.from_rows({t: {p: K.one} for t, p in enumerate(space.pivots)},
                            (space.dim, space.ambient), K)


def check_module(M: LeftModule) -> AxiomReport:
    """rho(e_i) rho(e_j) = rho(e_i e_j) and rho(1) = id."""
    A = M.algebra
    n, m = A.dim, M.dim
    report = AxiomReport("module")
    lhs = linalg.hstack(*[linalg.mul(M.action[i], M.action[j]) for i in range(n) for j in range(n)])
    rhs = linalg.hstack(*[M.act(A.product(A.basis_vector(i), A.basis_vector(j)))
                          for i in range(n) for j in range(n)])
    report.check_equal("action multiplicative", "module axioms", lhs, rhs, [n, n, m])
    report.check_equal("unit acts as identity", "module axioms", M.act(A.unit), M.identity, [m])
    get_logger().debug("modules", "modules", "check_module", report.summary(), name=M.name)
    return report


# ----------------------------------------------------------------------
# monoidal structure
# ----------------------------------------------------------------------

def diagonal_action(M: LeftModule, N: LeftModule) -> List[Matrix]:
    """a . (m (x) n) = a(1) . m (x) a(2) . n on the full tensor product."""
    A = M.algebra
    if N.algebra is not A:
        raise InputError("modules over different algebras")
    return [A.contract(A.coproduct(A.basis_vector(i)), M.action.__getitem__, N.action.__getitem__)
            for i in range(A.dim)]


def monoidal_product(M: LeftModule, N: LeftModule) -> LeftModule:
    """M x N = Delta(1) . (M (x) N) with the diagonal action."""
    A = M.algebra
    ambient = diagonal_action(M, N)
    projector = A.contract(A.delta_one, M.action.__getitem__, N.action.__getitem__)
    product = restrict_action(A, ambient, linalg.image(projector),
                              f"({M.name or 'M'} x {N.name or 'N'})")
    get_logger().debug("modules", "modules", "monoidal_product", "product module built",
                       left=M.dim, right=N.dim, dim=product.dim)
    return product


def product_map(T1: Matrix, T2: Matrix, source: LeftModule, target: LeftModule) -> Matrix:
    """T1 x T2, the restriction of T1 (x) T2 to product modules."""
    coords = target.space.coordinate_matrix(linalg.mul(linalg.kron(T1, T2), source.embedding))
    if coords is None:
        raise WhakitError("product of maps leaves the target product module")
    return coords


def check_associativity(M: LeftModule, N: LeftModule, L: LeftModule) -> AxiomReport:
    """(M x N) x L and M x (N x L) are the same subspace of M (x) N (x) L."""
    report = AxiomReport("associativity")
    MN, NL = monoidal_product(M, N), monoidal_product(N, L)
    left = monoidal_product(MN, L)
    right = monoidal_product(M, NL)
    left_space = Subspace.from_columns(linalg.mul(linalg.kron(MN.embedding, L.identity), left.embedding))
    right_space = Subspace.from_columns(linalg.mul(linalg.kron(M.identity, NL.embedding), right.embedding))
    report.check_true("associator is the identity", "monoidal product", left_space == right_space)
    return report


# ----------------------------------------------------------------------
# unit constraints and conjugation
# ----------------------------------------------------------------------

class _UnitData:
    """Ambient matrices of the unit constraints of one module."""

    def __init__(self, M: LeftModule):
        A = as_weak_hopf(M.algebra)
        AL = A.left_subalgebra
        self.ell = AL.dim
        self.extract = _pivot_extraction(AL)
        rho = M.action.__getitem__
        e = A.basis_vector
        self.left = A.sandwich(lambda j: linalg.mul(self.extract, A.S, e(j)), rho)
        self.right = A.sandwich(rho, lambda k: linalg.mul(self.extract, e(k)))
        K, m = A.K, M.dim
        left_inv, right_inv = [], []
        for t, b in enumerate(AL.vectors()):
            et = linalg.transpose(linalg.unit_vector(self.ell, t, K))
            left_inv.append(linalg.mul(M.act(b), linalg.kron(et, M.identity)))
            right_inv.append(linalg.mul(M.act(linalg.mul(A.S_inv, b)), linalg.kron(M.identity, et)))
        self.left_inverse = linalg.add(*left_inv)
        self.right_inverse = linalg.add(*right_inv)
        self.m = m


def unit_constraints(M: LeftModule, N: Optional[LeftModule] = None) -> UnitConstraints:
    """
    X^L_M(m) = S(1(1)) (x) 1(2) . m and X^R_M(m) = 1(1) . m (x) 1(2) with inverses.

    Certifies module-map properties, mutual inverses, naturality against the
    action of central elements, and the triangle identity with N (default M).
    """
    A = as_weak_hopf(M.algebra)
    N = N or M
    mul, kron = linalg.mul, linalg.kron
    report = AxiomReport("unit-constraints")
    U = unit_module(A)
    UM, MU = monoidal_product(U, M), monoidal_product(M, U)
    data = _UnitData(M)
    m = M.dim

    left = ModuleMap(M, UM, UM.space.coordinate_matrix(data.left))
    left_inverse = ModuleMap(UM, M, mul(data.left_inverse, UM.embedding))
    right = ModuleMap(M, MU, MU.space.coordinate_matrix(data.right))
    right_inverse = ModuleMap(MU, M, mul(data.right_inverse, MU.embedding))
    for name, T in (("X^L", left), ("X^L inverse", left_inverse), ("X^R", right), ("X^R inverse", right_inverse)):
        report.check_true(f"{name} is a module map", "unit constraints", T.is_module_map())
    report.check_equal("X^L inverse after X^L", "unit constraints",
                       mul(left_inverse.matrix, left.matrix), M.identity, [m])
    report.check_equal("X^L after X^L inverse", "unit constraints",
                       mul(left.matrix, left_inverse.matrix), UM.identity, [UM.dim])
    report.check_equal("X^R inverse after X^R", "unit constraints",
                       mul(right_inverse.matrix, right.matrix), M.identity, [m])
    report.check_equal("X^R after X^R inverse", "unit constraints",
                       mul(right.matrix, right_inverse.matrix), MU.identity, [MU.dim])

    ell = data.ell
    for t, z in enumerate(A.center.vectors()):
        T = M.act(z)
        report.check_equal(f"X^L natural [{t}]", "unit constraints",
                           mul(data.left, T), mul(kron(linalg.identity(ell, A.K), T), data.left), [m])
        report.check_equal(f"X^R natural [{t}]", "unit constraints",
                           mul(data.right, T), mul(kron(T, linalg.identity(ell, A.K)), data.right), [m])

    n_data = _UnitData(N)
    MUN = monoidal_product(MU, N)
    W = mul(kron(MU.embedding, N.identity), MUN.embedding)
    composite = mul(kron(data.right, N.identity), kron(M.identity, n_data.left_inverse), W)
    report.check_equal("triangle identity", "unit constraints", composite, W, [MUN.dim])
    get_logger().info("modules", "modules", "unit_constraints", report.summary(), passed=report.passed)
    return UnitConstraints(left, left_inverse, right, right_inverse, report)


def left_conjugate(M: LeftModule) -> LeftModule:
    """<a . f, m> = <f, S(a) . m> on the dual space."""
    A = as_weak_hopf(M.algebra)
    return LeftModule(A, tuple(linalg.transpose(M.act(linalg.mul(A.S, A.basis_vector(i))))
                               for i in range(A.dim)), f"Cl({M.name})")


def right_conjugate(M: LeftModule) -> LeftModule:
    """<a . f, m> = <f, S^-1(a) . m> on the dual space."""
    A = as_weak_hopf(M.algebra)
    return LeftModule(A, tuple(linalg.transpose(M.act(linalg.mul(A.S_inv, A.basis_vector(i))))
                               for i in range(A.dim)), f"Cr({M.name})")


def conjugates(M: LeftModule) -> Conjugates:
    report = AxiomReport("conjugates")
    left, right = left_conjugate(M), right_conjugate(M)
    report.extend(check_module(left), prefix="left conjugate: ")
    report.extend(check_module(right), prefix="right conjugate: ")
    back = left_conjugate(right)
    report.check_true("left conjugate of right conjugate is M", "conjugate modules",
                      all(linalg.equal(a, b) for a, b in zip(back.action, M.action)))
    back = right_conjugate(left)
    report.check_true("right conjugate of left conjugate is M", "conjugate modules",
                      all(linalg.equal(a, b) for a, b in zip(back.action, M.action)))
    return Conjugates(left, right, report)


def _evaluation(A: WeakHopfAlgebra, pairing: LeftModule, extract: Matrix) -> Matrix:
    """1(2) <f, 1(1) . m> read off the action matrices of ``pairing``."""
    rows = [linalg.transpose(linalg.flatten(rho)) for rho in pairing.action]
    return A.sandwich(rows.__getitem__, lambda k: linalg.mul(extract, A.basis_vector(k)))


def _coevaluation(A: WeakHopfAlgebra, acting: LeftModule) -> Matrix:
    """x -> x . m_i (x) f_i on the basis of A^L."""
    vec_identity = linalg.flatten(acting.identity)
    return linalg.hstack(*[linalg.mul(linalg.kron(acting.act(b), acting.identity), vec_identity)
                           for b in A.left_subalgebra.vectors()])


def rigidity(M: LeftModule) -> AxiomReport:
    """Evaluation and coevaluation maps are module maps and satisfy the four zig-zag identities."""
    A = as_weak_hopf(M.algebra)
    mul, kron = linalg.mul, linalg.kron
    report = AxiomReport("rigidity")
    I = M.identity
    m = M.dim
    U = unit_module(A)
    Cl, Cr = left_conjugate(M), right_conjugate(M)
    data = _UnitData(M)
    cl_data, cr_data = _UnitData(Cl), _UnitData(Cr)
    extract = data.extract

    E_l = _evaluation(A, M, extract)
    C_l = _coevaluation(A, M)
    E_r = _evaluation(A, Cr, extract)
    C_r = _coevaluation(A, Cr)

    ClM, MCl = monoidal_product(Cl, M), monoidal_product(M, Cl)
    MCr, CrM = monoidal_product(M, Cr), monoidal_product(Cr, M)
    maps = (
        ("left evaluation", ModuleMap(ClM, U, mul(E_l, ClM.embedding))),
        ("left coevaluation", ModuleMap(U, MCl, MCl.space.coordinate_matrix(C_l))),
        ("right evaluation", ModuleMap(MCr, U, mul(E_r, MCr.embedding))),
        ("right coevaluation", ModuleMap(U, CrM, CrM.space.coordinate_matrix(C_r))),
    )
    for name, T in maps:
        report.check_true(f"{name} is a module map", "evaluation and coevaluation",
                          T.matrix is not None and T.is_module_map())

    report.check_equal("left zig-zag on M", "rigidity",
                       mul(data.right_inverse, kron(I, E_l), kron(C_l, I), data.left), I, [m])
    report.check_equal("left zig-zag on the conjugate", "rigidity",
                       mul(cl_data.left_inverse, kron(E_l, I), kron(I, C_l), cl_data.right), I, [m])
    report.check_equal("right zig-zag on M", "rigidity",
                       mul(data.left_inverse, kron(E_r, I), kron(I, C_r), data.right), I, [m])
    report.check_equal("right zig-zag on the conjugate", "rigidity",
                       mul(cr_data.right_inverse, kron(I, E_r), kron(C_r, I), cr_data.left), I, [m])
    get_logger().info("modules", "modules", "rigidity", report.summary(), passed=report.passed, name=M.name)
    return report


# ----------------------------------------------------------------------
# decomposition, invertibility, radical
# ----------------------------------------------------------------------

def primitive_idempotents(A: WeakBialgebra, space: Subspace) -> Optional[List[Matrix]]:
    """
    Primitive orthogonal idempotents of a commutative semisimple subalgebra.

    Splits 1 along the eigenvalues of multiplication by each basis element.
    Returns None when some minimal polynomial has an irreducible factor of
    degree two or more over the field.
    """
    K = A.K
    idempotents = [A.unit]
    for z in space.vectors():
        refined = []
        for e in idempotents:
            piece = Subspace.span([A.product(e, y) for y in space.vectors()], A.dim, K)
            Lz = linalg.restrict(A.left_mult(z), piece, piece)
            poly = linalg.minimal_polynomial(Lz, _X)
            roots = []
            for factor, _ in poly.factor_list()[1]:
                if factor.degree() > 1:
                    return None
                a, b = factor.all_coeffs()
                roots.append(-K.from_sympy(b) / K.from_sympy(a))
            if len(roots) == 1:
                refined.append(e)
                continue
            for r in roots:
                f = e
                for r2 in roots:
                    if r2 == r:
                        continue
                    shifted = linalg.sub(z, linalg.scale(A.unit, r2))
                    f = linalg.scale(A.product(f, shifted), K.one / (r - r2))
                refined.append(f)
        idempotents = refined
    return idempotents


def class_decomposition(A: WeakHopfAlgebra, M: LeftModule) -> ClassDecomposition:
    """
    Split M into the summands z_p^L z_q^R . M with z_q^R = S(z_q^L).

    Certifies that the projectors sum to the identity and the dimension bound
    dim M_(p,q) >= max(dim A^L z_p, dim A^L z_q) on nonzero classes. For the
    unit module every nonzero class is diagonal, M_(p,p) = A^L z_p.
    """
    A = as_weak_hopf(A)
    report = AxiomReport("class-decomposition")
    AL = A.left_subalgebra
    ZL = AL.intersection(A.center)
    idempotents = primitive_idempotents(A, ZL)
    if idempotents is None:
        report.check_true("centre of A^L splits", "class decomposition", False,
                          detail=f"non-split over {A.field}")
        return ClassDecomposition(False, [], [], report)
    right = [linalg.mul(A.S, z) for z in idempotents]
    summand_dims = [AL.image(A.right_mult(z)).dim for z in idempotents]
    is_unit = M.dim == AL.dim and all(linalg.equal(a, b) for a, b in zip(M.action, unit_module(A).action))
    classes = []
    projectors = []
    for p, zp in enumerate(idempotents):
        for q, zq in enumerate(right):
            proj = M.act(A.product(zp, zq))
            projectors.append(proj)
            space = linalg.image(proj)
            if space.dim == 0:
                continue
            classes.append(ModuleClass(p, q, space))
            report.check_true(f"class ({p},{q}) dimension bound", "class decomposition",
                              space.dim >= max(summand_dims[p], summand_dims[q]),
                              witness=[p, q], detail=f"dim {space.dim}")
            if is_unit:
                report.check_true(f"unit module class ({p},{q}) is diagonal", "class decomposition",
                                  p == q and space.dim == summand_dims[p], witness=[p, q],
                                  detail=f"dim {space.dim}, dim A^L z_p = {summand_dims[p]}")
    report.check_equal("class projectors sum to identity", "class decomposition",
                       linalg.add(*projectors), M.identity, [M.dim])
    get_logger().info("modules", "modules", "class_decomposition", "module decomposed",
                      classes=len(classes), idempotents=len(idempotents), unit=is_unit)
    return ClassDecomposition(True, idempotents, classes, report)


def _find_generator(M: LeftModule, space: Subspace, bound: int, max_candidates: int) -> Optional[Matrix]:
    basis = space.vectors()
    for count, coeffs in enumerate(linalg.bounded_vectors(M.dim, bound)):
        if count >= max_candidates:
            break
        v = linalg.column([M.algebra.field.convert(c) for c in coeffs], M.K)
        if linalg.rank(linalg.hstack(*[linalg.mul(M.act(b), v) for b in basis])) == space.dim:
            return v
    return None


def commutant(matrices: Sequence[Matrix], size: int, K) -> Subspace:
    """Matrices T (flattened row-major) with T X = X T for every X."""
    eye = linalg.identity(size, K)
    blocks = [linalg.sub(linalg.kron(eye, linalg.transpose(X)), linalg.kron(X, eye)) for X in matrices]
    return linalg.kernel(linalg.vstack(*blocks))


def is_invertible_module(A: WeakHopfAlgebra, M: LeftModule, bound: int = 3,
                         max_candidates: int = 4096) -> InvertibilityVerdict:
    """
    M is invertible iff dim M = dim A^L and M is free of rank one over both
    A^L and A^R; generators are searched with bounded integer coordinates.
    """
    A = as_weak_hopf(A)
    report = AxiomReport("invertible-module")
    AL, AR = A.left_subalgebra, A.right_subalgebra
    same_dim = M.dim == AL.dim
    report.check_true("dimension equals dim A^L", "invertible modules", same_dim,
                      detail=f"{M.dim} vs {AL.dim}")
    if not same_dim:
        return InvertibilityVerdict(False, None, None, report)
    left = _find_generator(M, AL, bound, max_candidates)
    right = _find_generator(M, AR, bound, max_candidates)
    report.check_true("free over A^L", "invertible modules", left is not None)
    report.check_true("free over A^R", "invertible modules", right is not None)
    invertible = left is not None and right is not None
    if invertible:
        ends = commutant([M.act(x) for x in AR.vectors()], M.dim, A.K)
        report.check_true("A^R-endomorphisms have dimension dim A^L", "invertible modules",
                          ends.dim == AL.dim, detail=f"{ends.dim}")
    get_logger().info("modules", "modules", "is_invertible_module", "invertibility decided",
                      invertible=invertible, name=M.name)
    return InvertibilityVerdict(invertible, left, right, report)


def _trace(m: Matrix):
    K = m.domain
    total = K.zero
    for i, row in m.rep.items():
        total += row.get(i, K.zero)
    return total


def radical(A: WeakBialgebra) -> Subspace:
    """
    rad A as the kernel of the trace form tr(L_x L_y).

    Raises:
        CriterionUnavailable: in positive characteristic
    """
    if A.field.characteristic:
        raise CriterionUnavailable(f"trace-form radical needs characteristic zero, field is {A.field}")
    left = [A.left_mult(A.basis_vector(i)) for i in range(A.dim)]
    form = linalg.from_rows({i: {j: _trace(linalg.mul(left[i], left[j])) for j in range(A.dim)}
                             for i in range(A.dim)}, (A.dim, A.dim), A.K)
    return linalg.kernel(form)


def radical_annihilates_unit(A: WeakBialgebra) -> RadicalCheck:
    """Whether Pi^L(rad A) = 0."""
    rad = radical(A)
    annihilates = rad.dim == 0 or linalg.is_zero(linalg.mul(A.projections.left, rad.basis))
    get_logger().info("modules", "modules", "radical_annihilates_unit", "radical computed",
                      radical_dim=rad.dim, annihilates=annihilates)
    return RadicalCheck(annihilates, rad)
