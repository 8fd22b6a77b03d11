"""
The "whakit/1" structure-constant file format.

A file is one JSON object:

    {"format": "whakit/1", "field": {...}, "dim": n, "basis": [...], "name": "...",
     "mult": [[i, j, k, c], ...],    e_i e_j has coefficient c on e_k
     "unit": [c, ...],
     "comult": [[i, j, k, c], ...],  Delta(e_i) has coefficient c on e_j (x) e_k
     "counit": [c, ...],
     "antipode": [[c, ...], ...]}    optional, dense rows

Scalars use the field's text encoding. Triples are written sorted, one per
line, so that dumps(loads(text)) == text for every canonical file.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from . import linalg
from .errors import FormatError
from .fields import Field
from .linalg import Matrix
from .logger import get_logger
from .wba import WeakBialgebra
from .wha import WeakHopfAlgebra


FORMAT_TAG = "whakit/1"
_KEYS = ("format", "field", "dim", "basis", "name", "mult", "unit", "comult", "counit", "antipode")
_REQUIRED = ("format", "field", "dim", "mult", "unit", "comult", "counit")


def _compact(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _triples(m: Matrix, n: int, fld: Field, transposed: bool) -> List[list]:
    """Sparse (i, j, k, c) triples of mult (n x n^2) or comult (n^2 x n)."""
    out = []
    for row, entries in m.rep.items():
        for col, c in entries.items():
            if not c:
                continue
            if transposed:
                j, k = divmod(row, n)
                out.append((col, j, k, c))
            else:
                i, j = divmod(col, n)
                out.append((i, j, row, c))
    return [[i, j, k, fld.encode(c)] for i, j, k, c in sorted(out, key=lambda t: t[:3])]


def to_dict(A: WeakBialgebra) -> Dict[str, Any]:
    fld, n = A.field, A.dim
    data: Dict[str, Any] = {
        "format": FORMAT_TAG,
        "field": fld.to_dict(),
        "dim": n,
        "basis": list(A.basis),
        "name": A.name,
        "mult": _triples(A.mult, n, fld, transposed=False),
        "unit": [fld.encode(c) for c in linalg.entries(A.unit)],
        "comult": _triples(A.comult, n, fld, transposed=True),
        "counit": [fld.encode(c) for c in linalg.entries(linalg.transpose(A.counit))],
    }
    if isinstance(A, WeakHopfAlgebra):
        zero = A.K.zero
        data["antipode"] = [[fld.encode(A.S.rep.get(i, {}).get(j, zero)) for j in range(n)] for i in range(n)]
    return data


def dumps(A: WeakBialgebra) -> str:
    """Canonical text: top-level keys in a fixed order, one triple or row per line."""
    data = to_dict(A)
    lines = ["{"]
    keys = [k for k in _KEYS if k in data]
    for pos, key in enumerate(keys):
        value = data[key]
        end = "," if pos < len(keys) - 1 else ""
        if key in ("mult", "comult", "antipode") and value:
            lines.append(f"  {json.dumps(key)}: [")
            lines.extend(f"    {_compact(item)}{',' if t < len(value) - 1 else ''}" for t, item in enumerate(value))
            lines.append(f"  ]{end}")
        else:
            lines.append(f"  {json.dumps(key)}: {_compact(value)}{end}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _index(value: Any, n: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < n:
        raise FormatError(f"{what}: index {value!r} out of range for dimension {n}")
    return value


def _scalar_list(fld: Field, values: Any, length: int, what: str) -> List[object]:
    if not isinstance(values, list) or len(values) != length:
        raise FormatError(f"{what} must be a list of {length} scalars")
    return [fld.parse(v) for v in values]


def _read_triples(fld: Field, values: Any, n: int, what: str) -> Dict[tuple, object]:
    if not isinstance(values, list):
        raise FormatError(f"{what} must be a list of [i, j, k, scalar] triples")
    out: Dict[tuple, object] = {}
    for item in values:
        if not isinstance(item, list) or len(item) != 4:
            raise FormatError(f"{what}: malformed triple {item!r}")
        key = tuple(_index(x, n, what) for x in item[:3])
        if key in out:
            raise FormatError(f"{what}: duplicate triple for {list(key)}")
        out[key] = fld.parse(item[3])
    return out


def from_dict(data: Any) -> WeakBialgebra:
    """
    Build the algebra described by a parsed file.

    Raises:
        FormatError: for a wrong tag, missing keys or malformed entries
        FieldError: for scalars the field cannot represent
    """
    if not isinstance(data, dict):
        raise FormatError("a structure-constant file must hold a JSON object")
    missing = [k for k in _REQUIRED if k not in data]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")
    if data["format"] != FORMAT_TAG:
        raise FormatError(f"unsupported format tag {data['format']!r}, expected {FORMAT_TAG!r}")
    fld = Field.from_dict(data["field"])
    n = data["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError(f"dim must be a positive integer, got {n!r}")
    basis = data.get("basis") or []
    if basis and (not isinstance(basis, list) or len(basis) != n):
        raise FormatError(f"basis must list {n} labels")
    K = fld.domain

    mult_rows: Dict[int, Dict[int, object]] = {}
    for (i, j, k), c in _read_triples(fld, data["mult"], n, "mult").items():
        mult_rows.setdefault(k, {})[i * n + j] = c
    comult_rows: Dict[int, Dict[int, object]] = {}
    for (i, j, k), c in _read_triples(fld, data["comult"], n, "comult").items():
        comult_rows.setdefault(j * n + k, {})[i] = c
    structure = dict(
        field=fld,
        mult=linalg.from_rows(mult_rows, (n, n * n), K),
        unit=linalg.column(_scalar_list(fld, data["unit"], n, "unit"), K),
        comult=linalg.from_rows(comult_rows, (n * n, n), K),
        counit=linalg.row(_scalar_list(fld, data["counit"], n, "counit"), K),
        basis=tuple(str(b) for b in basis),
        name=str(data.get("name") or ""),
    )
    antipode = data.get("antipode")
    if antipode is None:
        return WeakBialgebra(**structure)
    if not isinstance(antipode, list) or len(antipode) != n:
        raise FormatError(f"antipode must be a list of {n} rows")
    rows = [_scalar_list(fld, r, n, "antipode row") for r in antipode]
    return WeakHopfAlgebra(antipode=linalg.matrix(rows, K), **structure)


def loads(text: str) -> WeakBialgebra:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise FormatError(f"not valid JSON: {e}") from e
    return from_dict(data)


def read(path: Union[str, Path]) -> WeakBialgebra:
    """
    Raises:
        FormatError: if the file cannot be read or parsed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    A = loads(text)
    get_logger().debug("cli", "fileformat", "read", "structure constants loaded", path=str(path), dim=A.dim)
    return A


def write(A: WeakBialgebra, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(A), encoding="utf-8")
    get_logger().debug("cli", "fileformat", "write", "structure constants written", path=str(path), dim=A.dim)


def read_element(path: Union[str, Path], A: WeakBialgebra) -> Matrix:
    """
    Read {"element": [scalars]} as a column of A (or of its dual).

    Raises:
        FormatError: for a malformed file or a wrong number of coordinates
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as e:
        raise FormatError(f"cannot read element file {path}: {e}") from e
    if not isinstance(data, dict) or "element" not in data:
        raise FormatError('an element file must hold {"element": [scalars]}')
    values: Sequence[Any] = data["element"]
    if not isinstance(values, list) or len(values) != A.dim:
        raise FormatError(f"element must be a list of {A.dim} scalars")
    return linalg.column([A.field.convert(v) for v in values], A.K)
