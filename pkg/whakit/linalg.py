"""
Exact linear algebra kernel.

Everything is a sparse ``sympy.polys.matrices.DomainMatrix`` over a field
domain. Vectors are n x 1 columns, functionals are stored the same way and
paired with elements by the dot product. Tensor legs are flattened row-major:
the pair (i, j) of A (x) B sits at index i * dim(B) + j.
"""

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Poly, Symbol
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.sdm import SDM

from .errors import InputError


Matrix = DomainMatrix


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------

def from_rows(rows: Dict[int, Dict[int, object]], shape: Tuple[int, int], K) -> Matrix:
    """Build a sparse matrix from a row dict, dropping zeros."""
    clean = {}
    for i, row in rows.items():
        kept = {j: v for j, v in row.items() if v}
        if kept:
            clean[i] = kept
    return DomainMatrix.from_rep(SDM(clean, shape, K))


def sparse(m: Matrix) -> Matrix:
    return m if m.rep.fmt == "sparse" else m.to_sparse()


def zeros(rows: int, cols: int, K) -> Matrix:
    return DomainMatrix.zeros((rows, cols), K)


def identity(n: int, K) -> Matrix:
    return DomainMatrix.eye(n, K).to_sparse()


def matrix(entries: Sequence[Sequence[object]], K) -> Matrix:
    """Dense nested list (already in K) to sparse matrix."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    return from_rows({i: dict(enumerate(row)) for i, row in enumerate(entries)}, (rows, cols), K)


def column(values: Sequence[object], K) -> Matrix:
    return from_rows({i: {0: v} for i, v in enumerate(values)}, (len(values), 1), K)


def row(values: Sequence[object], K) -> Matrix:
    return from_rows({0: dict(enumerate(values))}, (1, len(values)), K)


def unit_vector(n: int, i: int, K) -> Matrix:
    return from_rows({i: {0: K.one}}, (n, 1), K)


def entry(m: Matrix, i: int, j: int):
    return m.rep.get(i, {}).get(j, m.domain.zero)


def scalar(m: Matrix):
    """The single entry of a 1 x 1 matrix."""
    if m.shape != (1, 1):
        raise InputError(f"expected a 1x1 matrix, got shape {m.shape}")
    return entry(m, 0, 0)


def entries(v: Matrix) -> List[object]:
    """Column vector to a dense list of domain elements."""
    zero = v.domain.zero
    return [v.rep.get(i, {}).get(0, zero) for i in range(v.shape[0])]


def columns(m: Matrix) -> List[Matrix]:
    return [column_of(m, j) for j in range(m.shape[1])]


def column_of(m: Matrix, j: int) -> Matrix:
    rows = {i: {0: r[j]} for i, r in m.rep.items() if j in r}
    return from_rows(rows, (m.shape[0], 1), m.domain)


# ----------------------------------------------------------------------
# arithmetic
# ----------------------------------------------------------------------

def mul(*factors: Matrix) -> Matrix:
    """Left-to-right matrix product of sparse matrices."""
    return reduce(lambda a, b: sparse(a).matmul(sparse(b)), factors)


def add(*terms: Matrix) -> Matrix:
    return reduce(lambda a, b: sparse(a) + sparse(b), terms)


def sub(a: Matrix, b: Matrix) -> Matrix:
    return sparse(a) - sparse(b)


def scale(m: Matrix, c) -> Matrix:
    return sparse(m).scalarmul(c)


def transpose(m: Matrix) -> Matrix:
    return sparse(m).transpose()


def linear_combination(coefficients: Iterable[object], vectors: Iterable[Matrix]) -> Matrix:
    total = None
    for c, v in zip(coefficients, vectors):
        if not c:
            continue
        term = scale(v, c)
        total = term if total is None else total + term
    return total


def is_zero(m: Matrix) -> bool:
    return not any(m.rep.values())


def equal(a: Matrix, b: Matrix) -> bool:
    """Exact equality including shape."""
    return a.shape == b.shape and is_zero(sub(a, b))


def first_difference(a: Matrix, b: Matrix) -> Optional[Tuple[int, int]]:
    """(row, col) of the first differing entry in column-major order, or None."""
    if a.shape != b.shape:
        raise InputError(f"shape mismatch {a.shape} vs {b.shape}")
    diff = sub(a, b).rep
    best = None
    for i, r in diff.items():
        for j in r:
            if best is None or (j, i) < (best[1], best[0]):
                best = (i, j)
    return best


def kron(*factors: Matrix) -> Matrix:
    """Kronecker product with the row-major leg convention."""
    return reduce(_kron2, factors)


def _kron2(a: Matrix, b: Matrix) -> Matrix:
    (p, q), (r, s) = a.shape, b.shape
    rows: Dict[int, Dict[int, object]] = {}
    b_rep = sparse(b).rep
    for i, a_row in sparse(a).rep.items():
        for j, x in a_row.items():
            for k, b_row in b_rep.items():
                target = rows.setdefault(i * r + k, {})
                base = j * s
                for l, y in b_row.items():
                    target[base + l] = x * y
    return from_rows(rows, (p * r, q * s), a.domain)


def hstack(*blocks: Matrix) -> Matrix:
    rows: Dict[int, Dict[int, object]] = {}
    offset = 0
    height = blocks[0].shape[0]
    for block in blocks:
        if block.shape[0] != height:
            raise InputError("hstack needs equal row counts")
        for i, r in sparse(block).rep.items():
            target = rows.setdefault(i, {})
            for j, v in r.items():
                target[offset + j] = v
        offset += block.shape[1]
    return from_rows(rows, (height, offset), blocks[0].domain)


def vstack(*blocks: Matrix) -> Matrix:
    rows: Dict[int, Dict[int, object]] = {}
    offset = 0
    width = blocks[0].shape[1]
    for block in blocks:
        if block.shape[1] != width:
            raise InputError("vstack needs equal column counts")
        for i, r in sparse(block).rep.items():
            rows[offset + i] = dict(r)
        offset += block.shape[0]
    return from_rows(rows, (offset, width), blocks[0].domain)


def power(m: Matrix, exponent: int) -> Matrix:
    result = identity(m.shape[0], m.domain)
    base = sparse(m)
    while exponent > 0:
        if exponent & 1:
            result = mul(result, base)
        base = mul(base, base)
        exponent >>= 1
    return result


# ----------------------------------------------------------------------
# tensor legs
# ----------------------------------------------------------------------

def decode_index(index: int, dims: Sequence[int]) -> Tuple[int, ...]:
    """Flat row-major index to a multi-index over legs of the given sizes."""
    legs = []
    for d in reversed(dims):
        index, leg = divmod(index, d)
        legs.append(leg)
    return tuple(reversed(legs))


def encode_index(legs: Sequence[int], dims: Sequence[int]) -> int:
    index = 0
    for leg, d in zip(legs, dims):
        index = index * d + leg
    return index


def permute_legs(dims: Sequence[int], perm: Sequence[int], K) -> Matrix:
    """
    Permutation matrix moving leg ``perm[t]`` of the input to position t.

    The output tensor has leg sizes ``[dims[p] for p in perm]``.
    """
    out_dims = [dims[p] for p in perm]
    total = 1
    for d in dims:
        total *= d
    rows = {}
    for src in range(total):
        legs = decode_index(src, dims)
        dst = encode_index([legs[p] for p in perm], out_dims)
        rows[dst] = {src: K.one}
    return from_rows(rows, (total, total), K)


def reshape(v: Matrix, rows: int, cols: int) -> Matrix:
    """Column vector of length rows*cols to a rows x cols matrix, row-major."""
    if v.shape != (rows * cols, 1):
        raise InputError(f"cannot reshape {v.shape} into {rows}x{cols}")
    out: Dict[int, Dict[int, object]] = {}
    for idx, r in v.rep.items():
        i, j = divmod(idx, cols)
        out.setdefault(i, {})[j] = r[0]
    return from_rows(out, (rows, cols), v.domain)


def flatten(m: Matrix) -> Matrix:
    """Inverse of :func:`reshape`."""
    rows, cols = m.shape
    out = {}
    for i, r in m.rep.items():
        for j, x in r.items():
            out[i * cols + j] = {0: x}
    return from_rows(out, (rows * cols, 1), m.domain)


# ----------------------------------------------------------------------
# elimination
# ----------------------------------------------------------------------

def rref(m: Matrix) -> Tuple[Matrix, int]:
    """Reduced row echelon form and rank."""
    reduced, pivots = _rref(m)
    return reduced, len(pivots)


def _rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    reduced, pivots = sparse(m).rep.rref()
    return DomainMatrix.from_rep(reduced), list(pivots)


def rank(m: Matrix) -> int:
    return len(_rref(m)[1])


def pivots(m: Matrix) -> List[int]:
    return _rref(m)[1]


@dataclass(frozen=True)
class Solution:
    """A particular solution (or None when inconsistent) and the kernel."""
    particular: Optional[Matrix]
    kernel: "Subspace"

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def kernel(m: Matrix) -> "Subspace":
    """Null space {x : m x = 0} as a canonical Subspace."""
    reduced, piv = _rref(m)
    return Subspace.from_rows(_kernel_rows(reduced, piv, m.shape[1]), m.shape[1], m.domain)


def _kernel_rows(reduced: Matrix, piv: List[int], ncols: int) -> Matrix:
    K = reduced.domain
    pivot_set = set(piv)
    free = [f for f in range(ncols) if f not in pivot_set]
    rows = {}
    rep = reduced.rep
    for t, f in enumerate(free):
        vec = {f: K.one}
        for i, p in enumerate(piv):
            value = rep.get(i, {}).get(f)
            if value:
                vec[p] = -value
        rows[t] = vec
    return from_rows(rows, (len(free), ncols), K)


def solve(m: Matrix, rhs: Matrix) -> Solution:
    """
    Solve m x = rhs exactly.

    Free variables of the particular solution are set to 0.

    Raises:
        InputError: if rhs is not a column with m's row count
    """
    if rhs.shape != (m.shape[0], 1):
        raise InputError(f"rhs shape {rhs.shape} does not match matrix rows {m.shape[0]}")
    ncols = m.shape[1]
    reduced, piv = _rref(hstack(m, rhs))
    null = kernel(m)
    if piv and piv[-1] == ncols:
        return Solution(None, null)
    out = {}
    for i, p in enumerate(piv):
        value = reduced.rep.get(i, {}).get(ncols)
        if value:
            out[p] = {0: value}
    return Solution(from_rows(out, (ncols, 1), m.domain), null)


def inverse(m: Matrix) -> Optional[Matrix]:
    """Two-sided inverse of a square matrix, or None when singular."""
    n, k = m.shape
    if n != k:
        raise InputError(f"inverse needs a square matrix, got {m.shape}")
    reduced, piv = _rref(hstack(m, identity(n, m.domain)))
    if piv[:n] != list(range(n)):
        return None
    return reduced.extract(list(range(n)), list(range(n, 2 * n)))


def is_invertible(m: Matrix) -> bool:
    return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]


# ----------------------------------------------------------------------
# subspaces
# ----------------------------------------------------------------------

class Subspace:
    """
    A linear subspace of K^ambient stored by its RREF basis rows.

    Two subspaces are equal iff their RREF matrices coincide.
    """

    def __init__(self, reduced: Matrix, pivot_columns: Sequence[int], ambient: int):
        self._rows = reduced
        self._pivots = list(pivot_columns)
        self.ambient = ambient

    @classmethod
    def from_rows(cls, m: Matrix, ambient: int, K) -> "Subspace":
        if m.shape[0] == 0:
            return cls.zero(ambient, K)
        reduced, piv = _rref(m)
        reduced = reduced.extract(list(range(len(piv))), list(range(ambient))) if piv else zeros(0, ambient, K)
        return cls(reduced, piv, ambient)

    @classmethod
    def from_columns(cls, m: Matrix) -> "Subspace":
        return cls.from_rows(transpose(m), m.shape[0], m.domain)

    @classmethod
    def span(cls, vectors: Sequence[Matrix], ambient: int, K) -> "Subspace":
        if not vectors:
            return cls.zero(ambient, K)
        return cls.from_columns(hstack(*vectors))

    @classmethod
    def zero(cls, ambient: int, K) -> "Subspace":
        return cls(zeros(0, ambient, K), [], ambient)

    @classmethod
    def full(cls, ambient: int, K) -> "Subspace":
        return cls(identity(ambient, K), list(range(ambient)), ambient)

    @property
    def domain(self):
        return self._rows.domain

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> List[int]:
        return list(self._pivots)

    @property
    def rows(self) -> Matrix:
        return self._rows

    @property
    def basis(self) -> Matrix:
        """Basis vectors as the columns of an ambient x dim matrix."""
        return transpose(self._rows) if self.dim else zeros(self.ambient, 0, self.domain)

    def vectors(self) -> List[Matrix]:
        return columns(self.basis)

    def coordinates(self, v: Matrix) -> Optional[Matrix]:
        """Coordinates of v in the RREF basis, or None if v is not in the span."""
        if v.shape != (self.ambient, 1):
            raise InputError(f"vector shape {v.shape} does not match ambient {self.ambient}")
        K = self.domain
        coords = column([entry(v, p, 0) for p in self._pivots], K)
        if self.dim == 0:
            return coords if is_zero(v) else None
        return coords if equal(mul(self.basis, coords), v) else None

    def coordinate_matrix(self, m: Matrix) -> Optional[Matrix]:
        """Coordinates of every column of m, or None if one lies outside."""
        if self.dim == 0:
            return zeros(0, m.shape[1], self.domain) if is_zero(m) else None
        coords = m.extract(self._pivots, list(range(m.shape[1])))
        return coords if equal(mul(self.basis, coords), m) else None

    def contains(self, v: Matrix) -> bool:
        return self.coordinates(v) is not None

    def contains_all(self, m: Matrix) -> bool:
        return self.coordinate_matrix(m) is not None

    def is_subspace_of(self, other: "Subspace") -> bool:
        return self.dim == 0 or other.contains_all(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise InputError("subspaces live in different ambient spaces")
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace.from_rows(vstack(self._rows, other._rows), self.ambient, self.domain)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise InputError("subspaces live in different ambient spaces")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.domain)
        stacked = hstack(self.basis, scale(other.basis, -self.domain.one))
        null = kernel(stacked)
        if null.dim == 0:
            return Subspace.zero(self.ambient, self.domain)
        coeffs = null.basis.extract(list(range(self.dim)), list(range(null.dim)))
        return Subspace.from_columns(mul(self.basis, coeffs))

    def image(self, m: Matrix) -> "Subspace":
        """Image of this subspace under the linear map m."""
        if self.dim == 0:
            return Subspace.zero(m.shape[0], self.domain)
        return Subspace.from_columns(mul(m, self.basis))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self._pivots == other._pivots
                and equal(self._rows, other._rows))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def image(m: Matrix) -> Subspace:
    return Subspace.from_columns(m)


def restrict(m: Matrix, source: Subspace, target: Subspace) -> Optional[Matrix]:
    """
    Matrix of m restricted to ``source`` in the coordinates of ``target``.

    Returns None if m does not map source into target.
    """
    return target.coordinate_matrix(mul(m, source.basis))


# ----------------------------------------------------------------------
# polynomials and enumeration
# ----------------------------------------------------------------------

def minimal_polynomial(m: Matrix, symbol: Symbol) -> Poly:
    """Minimal polynomial of a square matrix via the Krylov sequence of powers."""
    n = m.shape[0]
    K = m.domain
    powers = [flatten(identity(n, K))]
    current = identity(n, K)
    while True:
        current = mul(current, m)
        target = flatten(current)
        result = solve(hstack(*powers), target)
        if result.consistent:
            coeffs = entries(result.particular)
            degree = len(powers)
            poly_coeffs = [K.one] + [-coeffs[degree - 1 - i] for i in range(degree)]
            return Poly([K.to_sympy(c) for c in poly_coeffs], symbol, domain=K)
        powers.append(target)


def evaluate_polynomial(poly: Poly, m: Matrix) -> Matrix:
    """p(m) by Horner's scheme; coefficients converted into m's domain."""
    K = m.domain
    n = m.shape[0]
    result = zeros(n, n, K)
    eye = identity(n, K)
    for c in poly.all_coeffs():
        result = add(mul(result, m), scale(eye, K.convert(c)))
    return result


def shell_values(k: int) -> List[int]:
    """Coordinate values of shell k: 1, -1, 2, -2, ..., k, -k, 0."""
    out = []
    for v in range(1, k + 1):
        out.extend((v, -v))
    out.append(0)
    return out


def bounded_vectors(length: int, bound: int) -> Iterator[Tuple[int, ...]]:
    """
    Nonzero integer vectors with entries in [-bound, bound].

    Enumerated shell by shell (max |entry| = 1, 2, ...), lexicographically in
    the order of :func:`shell_values` inside each shell. The all-ones vector
    comes first.
    """
    if length == 0:
        return
    for k in range(1, bound + 1):
        for candidate in itertools.product(shell_values(k), repeat=length):
            if max(abs(c) for c in candidate) == k:
                yield candidate
