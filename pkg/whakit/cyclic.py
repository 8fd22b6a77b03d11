"""
The cyclic module of a weak Hopf algebra with a modular pair in involution.

For grouplikes sigma of the dual and s of A the cochains are

    C^0 = A^L,    C^n = Delta^{n-1}(1) . A^(x n)

with faces, degeneracies and the cyclic operator

    tau(a_1 (x) ... (x) a_n) = Delta^{n-1}(S(a_1 <- sigma)) . (a_2 (x) ... (x) a_n (x) s).

Every operator is built on the ambient tensor power, restricted to the
cochain spaces (which certifies it is well defined) and then compared in
cochain coordinates against the relations of the cyclic category.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import linalg
from .errors import AmbientCapExceeded, InputError
from .grouplikes import GrouplikeWitness, Kind, classify_grouplike
from .linalg import Matrix, Subspace
from .logger import get_logger
from .report import AxiomReport
from .wba import dualize
from .wha import WeakHopfAlgebra, as_weak_hopf


@dataclass(frozen=True)
class ModularPair:
    """Grouplikes (sigma, s) with the arrow-fixing and involution flags."""
    sigma: GrouplikeWitness
    s: GrouplikeWitness
    modular: bool
    involution: bool
    report: AxiomReport = field(repr=False)


@dataclass(frozen=True)
class CochainSpace:
    """C^n as a subspace of A^(x n) (of A for n = 0)."""
    degree: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class CyclicOperators:
    """
    Operators of one degree n in cochain coordinates.

    ``faces[i]`` is delta_i : C^{n-1} -> C^n, ``degeneracies[i]`` is
    sigma_i : C^{n+1} -> C^n and ``cyclic`` is tau : C^n -> C^n. An entry is
    None when the ambient operator leaves the target cochain space.
    """
    degree: int
    faces: List[Optional[Matrix]]
    degeneracies: List[Optional[Matrix]]
    cyclic: Optional[Matrix]
    report: AxiomReport = field(repr=False)


def check_modular_pair(A: WeakHopfAlgebra, sigma: Matrix, s: Matrix) -> ModularPair:
    """
    Evaluate sigma -> s = s = s <- sigma, s -> sigma = sigma = sigma <- s
    and S^2 = sigma -> s (.) s^-1 <- sigma^-1.

    Raises:
        InputError: if sigma or s is not a two-sided grouplike
    """
    A = as_weak_hopf(A)
    Ahat = dualize(A)
    mul = linalg.mul
    sigma_w = classify_grouplike(Ahat, sigma)
    s_w = classify_grouplike(A, s)
    if sigma_w is None or sigma_w.kind is not Kind.BOTH:
        raise InputError("sigma is not a grouplike element of the dual")
    if s_w is None or s_w.kind is not Kind.BOTH:
        raise InputError("s is not a grouplike element")
    report = AxiomReport("modular-pair")
    anchor = "modular pairs"
    modular = all([
        report.check_equal("sigma -> s = s", anchor, mul(A.left_hit(sigma), s), s),
        report.check_equal("s <- sigma = s", anchor, mul(A.right_hit(sigma), s), s),
        report.check_equal("s -> sigma = sigma", anchor, mul(A.dual_left_hit(s), sigma), sigma),
        report.check_equal("sigma <- s = sigma", anchor, mul(A.dual_right_hit(s), sigma), sigma),
    ])
    twisted = mul(A.left_hit(sigma), A.right_hit(sigma_w.inverse), A.left_mult(s), A.right_mult(s_w.inverse))
    involution = report.check_equal("S^2 = sigma -> s (.) s^-1 <- sigma^-1", "modular pairs in involution",
                                    A.antipode_power(2), twisted, [A.dim])
    get_logger().info("cyclic", "cyclic", "check_modular_pair", report.summary(),
                      modular=modular, involution=involution)
    return ModularPair(sigma_w, s_w, modular, involution, report)


class _Tower:
    """Cochain spaces and ambient operators of A, cached per degree."""

    def __init__(self, A: WeakHopfAlgebra, mp: Optional[ModularPair], cap: int):
        self.A = A
        self.mp = mp
        self.cap = cap
        self.n = A.dim
        self.K = A.K
        self._spaces: Dict[int, CochainSpace] = {}
        self._left = [A.left_mult(A.basis_vector(i)) for i in range(self.n)]
        self._iterated: Dict[int, Matrix] = {0: A.identity}

    def eye(self, legs: int) -> Matrix:
        return linalg.identity(self.n ** legs, self.K)

    def _pad(self, before: int, middle: Matrix, after: int) -> Matrix:
        parts = []
        if before:
            parts.append(self.eye(before))
        parts.append(middle)
        if after:
            parts.append(self.eye(after))
        return linalg.kron(*parts)

    def iterated_coproduct(self, k: int) -> Matrix:
        """Delta^{k} : A -> A^(x k+1)."""
        if k not in self._iterated:
            previous = self.iterated_coproduct(k - 1)
            self._iterated[k] = linalg.mul(self._pad(0, self.A.comult, k - 1), previous)
        return self._iterated[k]

    def space(self, degree: int) -> CochainSpace:
        if degree < 0:
            raise InputError(f"cochain degree must be non-negative, got {degree}")
        if degree not in self._spaces:
            A = self.A
            if degree == 0:
                self._spaces[0] = CochainSpace(0, A.left_subalgebra)
            else:
                ambient = self.n ** degree
                if ambient > self.cap:
                    raise AmbientCapExceeded(
                        f"A^(x {degree}) has dimension {ambient}, above the cap {self.cap}",
                        {"degree": degree, "cap": self.cap})
                unit_power = linalg.mul(self.iterated_coproduct(degree - 1), A.unit)
                projector = None
                for idx, row in unit_power.rep.items():
                    legs = linalg.decode_index(idx, [self.n] * degree)
                    term = linalg.scale(linalg.kron(*[self._left[i] for i in legs]), row[0])
                    projector = term if projector is None else linalg.add(projector, term)
                self._spaces[degree] = CochainSpace(degree, linalg.image(projector))
                get_logger().debug("cyclic", "cyclic", "space", "cochain space computed",
                                   degree=degree, dim=self._spaces[degree].dim, ambient=ambient)
        return self._spaces[degree]

    # ambient operators -------------------------------------------------

    def face(self, n: int, i: int) -> Matrix:
        """delta_i : A^(x n-1) -> A^(x n) (A^L inside A for n = 1)."""
        A = self.A
        P = A.projections
        if n == 1:
            return P.right_bar if i == 0 else A.right_mult(self.mp.s.g)
        if i == 0:
            return A.sandwich(lambda j: A.basis_vector(j),
                              lambda k: self._pad(0, self._left[k], n - 2))
        if i < n:
            return self._pad(i - 1, A.comult, n - 1 - i)
        tail = A.sandwich(lambda j: self._left[j],
                          lambda k: A.product(A.basis_vector(k), self.mp.s.g))
        return self._pad(n - 2, tail, 0)

    def degeneracy(self, n: int, i: int) -> Matrix:
        """sigma_i : A^(x n+1) -> A^(x n) (onto A^L inside A for n = 0)."""
        A = self.A
        P = A.projections
        if n == 0:
            return P.left
        if i < n:
            merge = linalg.mul(A.mult, linalg.kron(P.left, A.identity))
            return self._pad(i, merge, n - 1 - i)
        merge = linalg.mul(A.mult, linalg.kron(P.right_bar, A.identity), A.flip)
        return self._pad(n - 1, merge, 0)

    def cyclic(self, n: int) -> Matrix:
        """tau on A^(x n); the identity of A for n = 0."""
        A = self.A
        if n == 0:
            return A.identity
        first = linalg.mul(A.S, A.right_hit(self.mp.sigma.g))
        spread = linalg.mul(self.iterated_coproduct(n - 1), first)
        blocks = []
        for b, column in enumerate(linalg.columns(spread)):
            block = None
            for idx, row in column.rep.items():
                legs = linalg.decode_index(idx, [self.n] * n)
                last = A.product(A.basis_vector(legs[-1]), self.mp.s.g)
                term = linalg.kron(*([self._left[i] for i in legs[:-1]] + [last]))
                term = linalg.scale(term, row[0])
                block = term if block is None else linalg.add(block, term)
            if block is None:
                block = linalg.zeros(self.n ** n, self.n ** (n - 1), self.K)
            blocks.append(block)
        return linalg.hstack(*blocks)

    # restriction --------------------------------------------------------

    def restricted(self, op: Matrix, source: int, target: int) -> Optional[Matrix]:
        return linalg.restrict(op, self.space(source).space, self.space(target).space)


def cochain(A: WeakHopfAlgebra, n: int, cap: int = 10000) -> CochainSpace:
    """
    C^n as the image of left multiplication by Delta^{n-1}(1).

    Raises:
        AmbientCapExceeded: if A^(x n) is larger than ``cap``
    """
    return _Tower(as_weak_hopf(A), None, cap).space(n)


def _operators(tower: _Tower, n: int, with_degeneracies: bool = True) -> CyclicOperators:
    report = AxiomReport("cyclic-operators")
    anchor = "operators of the cyclic module"
    faces: List[Optional[Matrix]] = []
    if n >= 1:
        for i in range(n + 1):
            op = tower.restricted(tower.face(n, i), n - 1, n)
            report.check_true(f"delta_{i}^({n}) well defined", anchor, op is not None, witness=[n, i])
            faces.append(op)
    degeneracies: List[Optional[Matrix]] = []
    if with_degeneracies:
        for i in range(n + 1):
            op = tower.restricted(tower.degeneracy(n, i), n + 1, n)
            report.check_true(f"sigma_{i}^({n}) well defined", anchor, op is not None, witness=[n, i])
            degeneracies.append(op)
    tau = tower.restricted(tower.cyclic(n), n, n)
    report.check_true(f"tau_({n}) well defined", anchor, tau is not None, witness=[n])
    return CyclicOperators(n, faces, degeneracies, tau, report)


def operators(A: WeakHopfAlgebra, mp: ModularPair, n: int, cap: int = 10000) -> CyclicOperators:
    """Faces, degeneracies and the cyclic operator of degree n in cochain coordinates."""
    A = as_weak_hopf(A)
    if n < 0:
        raise InputError(f"degree must be non-negative, got {n}")
    ops = _operators(_Tower(A, mp, cap), n)
    get_logger().debug("cyclic", "cyclic", "operators", ops.report.summary(), degree=n)
    return ops


def verify_lambda_relations(A: WeakHopfAlgebra, mp: ModularPair, max_degree: int = 3,
                            cap: int = 10000) -> AxiomReport:
    """
    The cosimplicial identities, the cyclic compatibilities and
    tau_(n)^{n+1} = id, for all degrees up to ``max_degree``.
    """
    A = as_weak_hopf(A)
    if max_degree < 0:
        raise InputError(f"max_degree must be non-negative, got {max_degree}")
    N = max_degree
    tower = _Tower(A, mp, cap)
    report = AxiomReport("cyclic")
    ops: Dict[int, CyclicOperators] = {}
    for n in range(N + 1):
        ops[n] = _operators(tower, n, with_degeneracies=n + 1 <= N)
        report.extend(ops[n].report)

    def delta(n: int, i: int) -> Optional[Matrix]:
        return ops[n].faces[i]

    def sigma(n: int, i: int) -> Optional[Matrix]:
        return ops[n].degeneracies[i]

    def tau(n: int) -> Optional[Matrix]:
        return ops[n].cyclic

    def compare(identity: str, anchor: str, lhs: List[Optional[Matrix]], rhs: List[Optional[Matrix]],
                witness: List[int]) -> None:
        if any(m is None for m in lhs + rhs):
            report.check_true(identity, anchor, False, witness=witness, detail="operator not well defined")
            return
        left, right = linalg.mul(*lhs), linalg.mul(*rhs)
        report.check_true(identity, anchor, linalg.equal(left, right), witness=witness)

    def identity_on(n: int) -> Matrix:
        return linalg.identity(tower.space(n).dim, A.K)

    simplicial = "cosimplicial identities"
    for n in range(1, N):
        for j in range(n + 2):
            for i in range(j):
                compare(f"delta_{j} delta_{i} = delta_{i} delta_{j - 1} [{n + 1}]", simplicial,
                        [delta(n + 1, j), delta(n, i)], [delta(n + 1, i), delta(n, j - 1)], [n + 1, i, j])
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                compare(f"sigma_{j} sigma_{i} = sigma_{i} sigma_{j + 1} [{n}]", simplicial,
                        [sigma(n, j), sigma(n + 1, i)], [sigma(n, i), sigma(n + 1, j + 1)], [n, i, j])
    for n in range(1, N + 1):
        for j in range(n):
            for i in range(n + 1):
                name = f"sigma_{j} delta_{i} [{n}]"
                lhs = [sigma(n - 1, j), delta(n, i)]
                if i == j or i == j + 1:
                    compare(name + " = id", simplicial, lhs, [identity_on(n - 1)], [n, i, j])
                elif i < j:
                    compare(name + f" = delta_{i} sigma_{j - 1}", simplicial, lhs,
                            [delta(n - 1, i), sigma(n - 2, j - 1)], [n, i, j])
                else:
                    compare(name + f" = delta_{i - 1} sigma_{j}", simplicial, lhs,
                            [delta(n - 1, i - 1), sigma(n - 2, j)], [n, i, j])

    cyclic = "cyclic compatibilities"
    for n in range(1, N + 1):
        compare(f"tau delta_0 = delta_{n} [{n}]", cyclic, [tau(n), delta(n, 0)], [delta(n, n)], [n, 0])
        for i in range(1, n + 1):
            compare(f"tau delta_{i} = delta_{i - 1} tau [{n}]", cyclic,
                    [tau(n), delta(n, i)], [delta(n, i - 1), tau(n - 1)], [n, i])
    for n in range(N):
        compare(f"tau sigma_0 = sigma_{n} tau^2 [{n}]", cyclic,
                [tau(n), sigma(n, 0)], [sigma(n, n), tau(n + 1), tau(n + 1)], [n, 0])
        for i in range(1, n + 1):
            compare(f"tau sigma_{i} = sigma_{i - 1} tau [{n}]", cyclic,
                    [tau(n), sigma(n, i)], [sigma(n, i - 1), tau(n + 1)], [n, i])
    for n in range(N + 1):
        t = tau(n)
        if t is None:
            report.check_true(f"tau^{n + 1} = id [{n}]", "cyclic operator has finite order", False,
                              witness=[n], detail="operator not well defined")
            continue
        report.check_true(f"tau^{n + 1} = id [{n}]", "cyclic operator has finite order",
                          linalg.equal(linalg.power(t, n + 1), identity_on(n)), witness=[n])
    get_logger().info("cyclic", "cyclic", "verify_lambda_relations", report.summary(),
                      passed=report.passed, max_degree=N, involution=mp.involution)
    return report
