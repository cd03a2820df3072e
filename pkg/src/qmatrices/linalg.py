"""
Exact linear algebra over Q(q) by fraction-free Gauss-Jordan elimination.

Matrices over Q(q) are first scaled row- or column-wise into Z[q]; the
elimination then only ever divides exactly by the previous pivot, so entries
stay polynomial. Division into Q(q) happens once, when kernel vectors are
normalised so that their free coordinate equals 1.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Sequence, Tuple

from flint import fmpz_poly

from .qfield import QScalar

__all__ = [
    "fraction_free_gauss_jordan",
    "nullspace",
    "rank",
    "connected_blocks",
    "solver_threads",
]

Poly = fmpz_poly


def _exact_div(a, b):
    if isinstance(a, int):
        quot, rem = divmod(a, b)
        if rem:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return quot
    return a / b  # fmpz_poly raises DomainError when inexact


def _size(a):
    if isinstance(a, int):
        return (0, abs(a))
    return (a.degree(), a.height_bits())


def fraction_free_gauss_jordan(matrix: List[List], one=None):
    """Reduce ``matrix`` (rows of ring elements) in place.

    Returns ``(pivot_cols, det)``: after the call, row r has ``det`` in column
    ``pivot_cols[r]`` and zeros in every other pivot column, and rows past the
    rank are zero. Works over Z or Z[q].
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if one is None:
        one = 1 if nrows == 0 or isinstance(matrix[0][0], int) else Poly([1])
    prev = one
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            a = matrix[i][col]
            if a:
                s = _size(a)
                if best is None or s < best[0]:
                    best = (s, i)
        if best is None:
            continue
        p = best[1]
        if p != r:
            matrix[r], matrix[p] = matrix[p], matrix[r]
        prow = matrix[r]
        piv = prow[col]
        nz = [j for j in range(ncols) if prow[j] and j != col]
        unit_prev = prev == one
        for i in range(nrows):
            if i == r:
                continue
            row = matrix[i]
            a = row[col]
            if not a:
                if not any(row):
                    continue
                for j in range(ncols):
                    v = row[j]
                    if v:
                        row[j] = piv * v if unit_prev else _exact_div(piv * v, prev)
                continue
            touched = set(nz)
            for j in range(ncols):
                if j == col:
                    continue
                v = row[j]
                if j in touched:
                    new = piv * v - a * prow[j]
                elif v:
                    new = piv * v
                else:
                    continue
                row[j] = new if unit_prev else _exact_div(new, prev)
            row[col] = 0 * piv
        prev = piv
        pivots.append(col)
        r += 1
    return pivots, prev


def _to_zq_rows(rows: Sequence[Sequence[QScalar]]) -> List[List[Poly]]:
    """Scale each row by the lcm of its denominators; entries become Z[q] polynomials."""
    out = []
    for row in rows:
        lcm = Poly([1])
        for c in row:
            if c and not c.den.is_one():
                g = lcm.gcd(c.den)
                lcm = lcm * (c.den / g)
        out.append([c.num * (lcm / c.den) if c else Poly([]) for c in row])
    return out


def _solve_dense(polys: List[List[Poly]], ncols: int):
    """Kernel of a Z[q] matrix as a list of (free_col, {pivot_col: (num, den)})."""
    if not polys:
        return [(f, {}) for f in range(ncols)]
    pivots, det = fraction_free_gauss_jordan(polys)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = {}
        for r, pc in enumerate(pivots):
            a = polys[r][f]
            if a:
                vec[pc] = (-a, det)
        basis.append((f, vec))
    return basis


def _solve_payload(payload):
    # process-pool entry point: plain integer lists in, plain integer lists out
    rows, ncols = payload
    polys = [[Poly(c) for c in row] for row in rows]
    result = _solve_dense(polys, ncols)
    return [(f, {pc: ([int(x) for x in a.coeffs()], [int(x) for x in b.coeffs()])
                 for pc, (a, b) in vec.items()}) for f, vec in result]


def solver_threads() -> int:
    """Worker count for block solves, capped by the QM_THREADS environment variable."""
    try:
        return max(1, int(os.environ.get("QM_THREADS", "1")))
    except ValueError:
        return 1


def connected_blocks(entries: Dict[Tuple[int, int], QScalar], nrows: int, ncols: int):
    """Split a sparse matrix into independent blocks.

    Returns a list of (row_indices, col_indices), sorted by smallest column;
    columns without entries form singleton blocks with no rows.
    """
    parent = list(range(ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_row: Dict[int, int] = {}
    for (r, c) in entries:
        if r in by_row:
            a, b = find(by_row[r]), find(c)
            if a != b:
                parent[max(a, b)] = min(a, b)
        else:
            by_row[r] = c
    cols: Dict[int, List[int]] = {}
    for c in range(ncols):
        cols.setdefault(find(c), []).append(c)
    rows: Dict[int, List[int]] = {}
    for r, c in by_row.items():
        rows.setdefault(find(c), []).append(r)
    return [(sorted(rows.get(root, [])), cs) for root, cs in sorted(cols.items())]


def nullspace(entries: Dict[Tuple[int, int], QScalar], nrows: int, ncols: int,
              threads: int | None = None) -> List[Dict[int, QScalar]]:
    """Right kernel of a sparse Q(q) matrix given as {(row, col): value}.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns (reduced echelon normalisation); vectors are ordered by free column.
    """
    threads = solver_threads() if threads is None else threads
    payloads = []
    for rows, cols in connected_blocks(entries, nrows, ncols):
        rpos = {r: k for k, r in enumerate(rows)}
        cpos = {c: k for k, c in enumerate(cols)}
        dense = [[QScalar(0)] * len(cols) for _ in rows]
        for (r, c), v in entries.items():
            if r in rpos and c in cpos:
                dense[rpos[r]][cpos[c]] = v
        payloads.append((cols, _to_zq_rows(dense)))

    if threads > 1 and len(payloads) > 1:
        plain = [([[[int(x) for x in p.coeffs()] for p in row] for row in polys], len(cols))
                 for cols, polys in payloads]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            raw = list(pool.map(_solve_payload, plain))
        solved = [[(f, {pc: (Poly(a), Poly(b)) for pc, (a, b) in vec.items()}) for f, vec in res]
                  for res in raw]
    else:
        solved = [_solve_dense(polys, len(cols)) for cols, polys in payloads]

    basis = []
    for (cols, _), result in zip(payloads, solved):
        for f, vec in result:
            v = {cols[f]: QScalar(1)}
            for pc, (a, b) in vec.items():
                v[cols[pc]] = QScalar(a, b)
            basis.append((cols[f], v))
    basis.sort(key=lambda t: t[0])
    return [v for _, v in basis]


def rank(columns: Sequence[Dict[object, QScalar]]) -> int:
    """Exact rank over Q(q) of vectors given as sparse {coordinate: value} maps."""
    keys = sorted({k for col in columns for k in col}, key=repr)
    if not keys or not columns:
        return 0
    # vectors as rows: row-scaling keeps the rank
    rows = [[col.get(k, QScalar(0)) for k in keys] for col in columns]
    pivots, _ = fraction_free_gauss_jordan(_to_zq_rows(rows))
    return len(pivots)
