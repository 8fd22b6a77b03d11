"""
Example generators.

Every entry of the registry builds a weak bialgebra (most of them weak Hopf
algebras) from exact data and names the verification suites it must pass:

    Z<n>, S3, V4   group algebras (Hopf special cases)
    M2Q, F2M2      B (x) B^op for B = M_2 with the counit tr(t x y)
    XP             (B (x) B^op) x| Z_2 for B = M_m(Q(sqrt 2)) over Q
    LZ             left-zero monoid bialgebra, no non-degenerate integral
"""

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import InputError
from .fields import QQ_FIELD, Field
from .linalg import Matrix
from .logger import get_logger
from .wba import WeakBialgebra
from .wha import WeakHopfAlgebra


_CYCLIC_NAME = re.compile(r"^Z(\d+)$")


# ----------------------------------------------------------------------
# group algebras
# ----------------------------------------------------------------------

def _validate_group_table(table: Sequence[Sequence[int]]) -> Tuple[int, List[int]]:
    """
    Check a Cayley table and return (identity, inverses).

    Raises:
        InputError: if the table is not square, not closed, has no identity,
            is not associative or lacks inverses
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InputError("group table must be a non-empty square table")
    if any(not isinstance(x, int) or not 0 <= x < n for row in table for x in row):
        raise InputError("group table entries must be element indices")
    identity = next((e for e in range(n)
                     if all(table[e][x] == x and table[x][e] == x for x in range(n))), None)
    if identity is None:
        raise InputError("group table has no identity element")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InputError("group table is not associative", {"a": a, "b": b, "c": c})
    inverses = []
    for a in range(n):
        inv = next((b for b in range(n) if table[a][b] == identity and table[b][a] == identity), None)
        if inv is None:
            raise InputError(f"element {a} has no inverse")
        inverses.append(inv)
    return identity, inverses


def group_algebra(table: Sequence[Sequence[int]], labels: Sequence[str] = (), name: str = "",
                  fld: Field = QQ_FIELD) -> WeakHopfAlgebra:
    """
    The group algebra k[G] with Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1.

    Args:
        table: Cayley table, table[i][j] is the index of e_i e_j
    """
    identity, inverses = _validate_group_table(table)
    n = len(table)
    one = fld.one
    A = WeakBialgebra.from_tables(
        fld, n,
        products={(i, j): {table[i][j]: one} for i in range(n) for j in range(n)},
        unit={identity: one},
        coproducts={i: {(i, i): one} for i in range(n)},
        counit={i: one for i in range(n)},
        basis=tuple(labels) or tuple(f"g{i}" for i in range(n)), name=name)
    S = linalg.from_rows({inverses[i]: {i: one} for i in range(n)}, (n, n), fld.domain)
    return WeakHopfAlgebra.from_bialgebra(A, S)


def cyclic_group(n: int, fld: Field = QQ_FIELD) -> WeakHopfAlgebra:
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_algebra(table, [f"g^{i}" for i in range(n)], f"Z{n}", fld)


def symmetric_group_s3(fld: Field = QQ_FIELD) -> WeakHopfAlgebra:
    """k[S_3]; basis in one-line notation, "123" is the identity."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return group_algebra(table, labels, "S3", fld)


def klein_four(fld: Field = QQ_FIELD) -> WeakHopfAlgebra:
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return group_algebra(table, ["e", "a", "b", "ab"], "V4", fld)


# ----------------------------------------------------------------------
# B (x) B^op from an index-one functional
# ----------------------------------------------------------------------

def separable_pair_wha(fld: Field, B_mult: Matrix, B_unit: Matrix, E_row: Matrix,
                       labels: Sequence[str] = (), name: str = "") -> WeakHopfAlgebra:
    """
    The weak Hopf algebra B (x) B^op of a separable algebra B and a
    non-degenerate functional E of index one.

    With dual bases e_i = b_i, f_i (E(e_i f_j) = delta_ij) and the Nakayama
    automorphism theta of E:

        (x (x) y)(x' (x) y') = x x' (x) y' y
        Delta(x (x) y) = sum_i (x (x) f_i) (x) (e_i (x) y)
        epsilon(x (x) y) = E(x y)
        S(x (x) y) = y (x) theta(x)

    Raises:
        InputError: if E is degenerate or sum_i f_i e_i is not 1
    """
    K = fld.domain
    N = B_unit.shape[0]
    if B_mult.shape != (N, N * N) or E_row.shape != (1, N):
        raise InputError("dimension mismatch in the structure constants of B")
    flip = linalg.permute_legs([N, N], [1, 0], K)
    gram = linalg.reshape(linalg.transpose(linalg.mul(E_row, B_mult)), N, N)
    gram_inv = linalg.inverse(gram)
    if gram_inv is None:
        raise InputError("the functional on B is degenerate")
    f = [linalg.column_of(gram_inv, j) for j in range(N)]
    b = [linalg.unit_vector(N, i, K) for i in range(N)]
    index = linalg.add(*[linalg.mul(B_mult, linalg.kron(f[i], b[i])) for i in range(N)])
    if not linalg.equal(index, B_unit):
        raise InputError("the functional is not of index one: sum_i f_i e_i != 1 "
                         "(for E = tr(t .) this is the condition tr(t^-1) = 1)")
    theta = linalg.mul(gram_inv, linalg.transpose(gram))

    I = linalg.identity(N, K)
    regroup = linalg.permute_legs([N] * 4, [0, 2, 1, 3], K)
    mult = linalg.mul(linalg.kron(B_mult, linalg.mul(B_mult, flip)), regroup)
    F = linalg.add(*[linalg.kron(f[r], b[r]) for r in range(N)])
    comult = linalg.kron(I, F, I)
    unit = linalg.kron(B_unit, B_unit)
    counit = linalg.mul(E_row, B_mult)
    antipode = linalg.mul(linalg.kron(I, theta), flip)
    basis = tuple(f"{x}|{y}" for x, y in itertools.product(labels, labels)) if labels else ()
    return WeakHopfAlgebra(field=fld, mult=mult, unit=unit, comult=comult, counit=counit,
                           basis=basis, name=name, antipode=antipode)


def _matrix_units(n: int, K) -> Tuple[Matrix, Matrix]:
    """Multiplication and unit of M_n on the basis E_ab (index a*n + b)."""
    rows: Dict[int, Dict[int, object]] = {}
    for a, b, d in itertools.product(range(n), repeat=3):
        # E_ab E_bd = E_ad
        rows.setdefault(a * n + d, {})[(a * n + b) * n * n + b * n + d] = K.one
    unit = linalg.column([K.one if a == b else K.zero for a in range(n) for b in range(n)], K)
    return linalg.from_rows(rows, (n * n, n ** 4), K), unit


def _square_matrix(t: Sequence[Sequence[object]], n: int, fld: Field) -> Matrix:
    if len(t) != n or any(len(row) != n for row in t):
        raise InputError(f"t must be an {n}x{n} matrix")
    return linalg.matrix([[fld.convert(x) for x in row] for row in t], fld.domain)


def matrix_pair_wha(n: int, t: Sequence[Sequence[object]], fld: Field = QQ_FIELD,
                    name: str = "") -> WeakHopfAlgebra:
    """
    M_n (x) M_n^op with epsilon(x (x) y) = tr(t x y); dimension n^4.

    Raises:
        InputError: if t is singular or tr(t^-1) != 1
    """
    K = fld.domain
    t_m = _square_matrix(t, n, fld)
    t_inv = linalg.inverse(t_m)
    if t_inv is None:
        raise InputError("t must be invertible")
    trace = sum((linalg.entry(t_inv, a, a) for a in range(n)), K.zero)
    if trace != K.one:
        raise InputError(f"the matrix pair needs tr(t^-1) = 1, got {fld.encode(trace)}",
                         {"n": n, "field": fld})
    mult, unit = _matrix_units(n, K)
    # tr(t E_ab) = t_ba
    E_row = linalg.row([linalg.entry(t_m, b, a) for a in range(n) for b in range(n)], K)
    labels = [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    return separable_pair_wha(fld, mult, unit, E_row, labels, name or f"M{n}pair")


def matrix_vector(t: Sequence[Sequence[object]], fld: Field = QQ_FIELD) -> Matrix:
    """The element sum t_ab E_ab of M_n as a column."""
    n = len(t)
    return linalg.column([fld.convert(t[a][b]) for a in range(n) for b in range(n)], fld.domain)


def matrix_pair_grouplike(t: Sequence[Sequence[object]], fld: Field = QQ_FIELD) -> Matrix:
    """t (x) t^-1, the grouplike implementing S^2 on the matrix pair."""
    n = len(t)
    t_inv = linalg.inverse(_square_matrix(t, n, fld))
    if t_inv is None:
        raise InputError("t must be invertible")
    inv_rows = [[linalg.entry(t_inv, a, b) for b in range(n)] for a in range(n)]
    return linalg.kron(matrix_vector(t, fld), matrix_vector(inv_rows, fld))


M2Q_T = [["1/3", "1/3"], ["1/3", "-2/3"]]
F2M2_T = [[1, 1], [1, 0]]


# ----------------------------------------------------------------------
# crossed product with Z_2
# ----------------------------------------------------------------------

def _quadratic_matrix_algebra(m: int, d: int, K) -> Tuple[Matrix, Matrix, List[str]]:
    """
    M_m(Q(sqrt d)) as a 2m^2-dimensional Q-algebra.

    Basis index (a*m + b)*2 + k stands for sqrt(d)^k E_ab.
    """
    N = 2 * m * m
    rows: Dict[int, Dict[int, object]] = {}
    for a, b, c, k, l in itertools.product(range(m), range(m), range(m), range(2), range(2)):
        left = (a * m + b) * 2 + k
        right = (b * m + c) * 2 + l
        if k + l == 2:
            out, coeff = (a * m + c) * 2, K.convert(d)
        else:
            out, coeff = (a * m + c) * 2 + k + l, K.one
        rows.setdefault(out, {})[left * N + right] = coeff
    unit = linalg.from_rows({(a * m + a) * 2: {0: K.one} for a in range(m)}, (N, 1), K)
    labels = [f"{'r' if k else ''}E{a + 1}{b + 1}" for a in range(m) for b in range(m) for k in range(2)]
    return linalg.from_rows(rows, (N, N * N), K), unit, labels


def crossed_product_example(m: int = 2, t: Optional[Sequence[Sequence[object]]] = None,
                            d: int = 2) -> WeakHopfAlgebra:
    """
    A = (B (x) B^op) x| Z_2 over Q with B = M_m(Q(sqrt d)) and the generator g
    acting by sqrt d -> -sqrt d on both factors; dimension 8 m^4.

    On the basis g^n x (index n * dim + i):

        (g^n x)(g^p y) = g^(n+p) gamma^p(x) y
        Delta(g^n x) = (g^n (x) g^n) Delta(x)
        epsilon(g^n x) = epsilon(x)
        S(g^n x) = g^n gamma^n(S(x) t_L gamma^n(t_L^-1)),  t_L = t (x) 1

    Args:
        m: size of the matrix blocks of B; the default 2 gives dimension 128
        t: rational m x m matrix with tr(t^-1) = 1, defaults to m times the identity
    """
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    fld = QQ_FIELD
    K = fld.domain
    t = t if t is not None else [[m if a == b else 0 for b in range(m)] for a in range(m)]
    t_m = _square_matrix(t, m, fld)
    t_inv = linalg.inverse(t_m)
    if t_inv is None:
        raise InputError("t must be invertible")
    trace = sum((linalg.entry(t_inv, a, a) for a in range(m)), K.zero)
    if trace != K.one:
        raise InputError(f"the crossed product needs tr(t^-1) = 1, got {fld.encode(trace)}")

    B_mult, B_unit, labels = _quadratic_matrix_algebra(m, d, K)
    N_B = B_unit.shape[0]
    # Tr_{Q(sqrt d)/Q} tr(t x): sqrt(d) E_ab -> 0, E_ab -> 2 t_ba
    E_row = linalg.from_rows({0: {(a * m + b) * 2: 2 * linalg.entry(t_m, b, a)
                                  for a in range(m) for b in range(m)}}, (1, N_B), K)
    base = separable_pair_wha(fld, B_mult, B_unit, E_row, labels, "XP-base")

    n = base.dim
    gamma_B = linalg.from_rows({i: {i: -K.one if i % 2 else K.one} for i in range(N_B)}, (N_B, N_B), K)
    gamma = linalg.kron(gamma_B, gamma_B)
    sign = [linalg.entry(gamma, i, i) for i in range(n)]

    def embed(v: Matrix) -> Matrix:
        return linalg.kron(v, B_unit)

    t_L = embed(linalg.column([linalg.entry(t_m, a, b) * (1 - k)
                               for a in range(m) for b in range(m) for k in range(2)], K))
    t_L_inv = embed(linalg.column([linalg.entry(t_inv, a, b) * (1 - k)
                                   for a in range(m) for b in range(m) for k in range(2)], K))

    mult_rows: Dict[int, Dict[int, object]] = {}
    for (i, j), out in _table(base).items():
        for g_i, g_j in itertools.product(range(2), repeat=2):
            c_sign = sign[i] if g_j else K.one
            for k, c in out.items():
                row = mult_rows.setdefault(((g_i + g_j) % 2) * n + k, {})
                row[(g_i * n + i) * 2 * n + g_j * n + j] = c_sign * c
    mult = linalg.from_rows(mult_rows, (2 * n, 4 * n * n), K)
    unit = linalg.vstack(base.unit, linalg.zeros(n, 1, K))

    comult_rows: Dict[int, Dict[int, object]] = {}
    for out, row in base.comult.rep.items():
        j, k = divmod(out, n)
        for i, c in row.items():
            for g in range(2):
                comult_rows.setdefault((g * n + j) * 2 * n + g * n + k, {})[g * n + i] = c
    comult = linalg.from_rows(comult_rows, (4 * n * n, 2 * n), K)
    counit = linalg.hstack(base.counit, base.counit)

    fixed = linalg.mul(base.right_mult(base.product(t_L, t_L_inv)), base.S)
    twisted = linalg.mul(gamma, base.right_mult(base.product(t_L, linalg.mul(gamma, t_L_inv))), base.S)
    zero = linalg.zeros(n, n, K)
    antipode = linalg.vstack(linalg.hstack(fixed, zero), linalg.hstack(zero, twisted))

    basis = tuple(base.basis) + tuple(f"g.{x}" for x in base.basis)
    get_logger().debug("zoo", "zoo", "crossed_product_example", "crossed product assembled",
                       m=m, d=d, dim=2 * n)
    return WeakHopfAlgebra(field=fld, mult=mult, unit=unit, comult=comult, counit=counit,
                           basis=basis, name="XP", antipode=antipode)


def _table(A: WeakBialgebra) -> Dict[Tuple[int, int], Dict[int, object]]:
    return {(i, j): A.product_terms(i, j) for i in range(A.dim) for j in range(A.dim)
            if A.product_terms(i, j)}


def crossed_product_generator(A: WeakHopfAlgebra) -> Matrix:
    """The Z_2 generator g = g.1 of the crossed product."""
    n = A.dim // 2
    return linalg.vstack(linalg.zeros(n, 1, A.K), A.unit.extract(list(range(n)), [0]))


# ----------------------------------------------------------------------
# a bialgebra without non-degenerate integrals
# ----------------------------------------------------------------------

def rigged_no_integral_wba(fld: Field = QQ_FIELD) -> WeakBialgebra:
    """
    The monoid algebra of {1, p, q} with p m = p and q m = q for m in {p, q};
    Delta(m) = m (x) m and epsilon(m) = 1. I^L = 0 and rad A = span(p - q).
    """
    one = fld.one
    products: Dict[Tuple[int, int], Dict[int, object]] = {}
    for i in range(3):
        products[(0, i)] = {i: one}
        products[(i, 0)] = {i: one}
    for i, j in itertools.product((1, 2), repeat=2):
        products[(i, j)] = {i: one}
    return WeakBialgebra.from_tables(
        fld, 3, products, unit={0: one},
        coproducts={i: {(i, i): one} for i in range(3)},
        counit={i: one for i in range(3)},
        basis=("1", "p", "q"), name="LZ")


# ----------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------

HOPF_MANIFEST = ("wba", "wba-identities", "wha", "projection-identities", "separability",
                 "nakayama", "integrals", "grouplikes", "modules", "hopfmod", "radford", "cyclic")


@dataclass(frozen=True)
class ZooEntry:
    """
    A named example with its construction parameters and required suites.

    ``limits`` caps configuration values for manifest runs, e.g. the cyclic
    degree of entries whose tensor powers outgrow the ambient cap.
    """
    name: str
    params: Mapping[str, object]
    build: Callable[[], WeakBialgebra] = field(repr=False)
    manifest: Tuple[str, ...] = HOPF_MANIFEST
    description: str = ""
    limits: Mapping[str, int] = field(default_factory=dict)


def _entries() -> Dict[str, ZooEntry]:
    entries = [
        ZooEntry("Z2", {"order": 2}, lambda: cyclic_group(2), HOPF_MANIFEST + ("double",),
                 "group algebra of Z_2"),
        ZooEntry("Z3", {"order": 3}, lambda: cyclic_group(3), HOPF_MANIFEST + ("double",),
                 "group algebra of Z_3"),
        ZooEntry("S3", {"group": "S3"}, symmetric_group_s3, HOPF_MANIFEST,
                 "group algebra of the symmetric group on three letters"),
        ZooEntry("V4", {"group": "V4"}, klein_four, HOPF_MANIFEST, "group algebra of the Klein four group"),
        ZooEntry("M2Q", {"n": 2, "t": M2Q_T, "field": "Q"},
                 lambda: matrix_pair_wha(2, M2Q_T, QQ_FIELD, "M2Q"), HOPF_MANIFEST + ("double",),
                 "M_2 (x) M_2^op over Q with a non-central t"),
        ZooEntry("F2M2", {"n": 2, "t": F2M2_T, "field": "F_2"},
                 lambda: matrix_pair_wha(2, F2M2_T, Field.prime(2), "F2M2"),
                 HOPF_MANIFEST,
                 "M_2 (x) M_2^op over F_2; S^2 is not the identity on A^L"),
        ZooEntry("XP", {"m": 2, "d": 2, "t": [[2, 0], [0, 2]]}, crossed_product_example, HOPF_MANIFEST,
                 "crossed product of B (x) B^op with Z_2, B = M_2(Q(sqrt 2)) as a Q-algebra",
                 limits={"max_degree": 1}),
        ZooEntry("LZ", {"monoid": "left-zero"}, rigged_no_integral_wba, ("wba", "wba-identities"),
                 "left-zero monoid bialgebra without non-degenerate integrals"),
    ]
    return {e.name: e for e in entries}


ZOO: Dict[str, ZooEntry] = _entries()


def get_entry(name: str) -> ZooEntry:
    """
    Look up a registry entry; "Z<n>" builds any cyclic group algebra.

    Raises:
        InputError: for an unknown name
    """
    if name in ZOO:
        return ZOO[name]
    match = _CYCLIC_NAME.match(name)
    if match and int(match.group(1)) >= 1:
        order = int(match.group(1))
        return ZooEntry(name, {"order": order}, lambda: cyclic_group(order), HOPF_MANIFEST,
                        f"group algebra of Z_{order}")
    raise InputError(f"unknown zoo entry {name!r}; known: {', '.join(sorted(ZOO))}, Z<n>")


def build(name: str) -> WeakBialgebra:
    entry = get_entry(name)
    A = entry.build()
    get_logger().info("zoo", "zoo", "build", "zoo entry built", name=name, dim=A.dim)
    return A
