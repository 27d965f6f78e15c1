#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact integer matrices: Hermite normal form by row operations and a
determinant that is computed twice (HNF diagonal and Bareiss elimination)
and cross-checked.

Entries are stored in numpy object arrays of Python ints, so there is no
overflow and no floating point anywhere.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
import numpy as np
import sympy
from .errors import ArityError, InternalCheckError


class IntMatrix(object):

    def __init__(self, rows):
        data = np.array(rows, dtype=object)
        if data.ndim != 2 or data.shape[0] == 0 or data.shape[1] == 0:
            raise ArityError("matrix must be 2-dimensional and non-empty, "
                             "got shape %s" % (data.shape,))
        for value in data.flat:
            if int(value) != value:
                raise ValueError("matrix entry(%s) is not an integer"
                                 % (value,))
        self.data = np.vectorize(int, otypes=[object])(data)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def elementary(cls, n, i, j, factor=1):
        """
        Identity plus ``factor`` at ``(i, j)``, ``i != j``.
        """
        if i == j:
            raise ValueError("elementary matrix needs i(%d) != j(%d)"
                             % (i, j))
        m = cls.identity(n)
        m.data[i, j] = factor
        return m

    @classmethod
    def from_text(cls, text):
        """
        Parse ``"2 0; 0 1"``: rows separated by ``;``.
        """
        rows = [[int(x) for x in row.split()] for row in text.split(";")
                if row.strip()]
        if len(set(len(row) for row in rows)) > 1:
            raise ArityError("rows of %r have different lengths" % text)
        return cls(rows)

    @property
    def shape(self):
        return self.data.shape

    def is_square(self):
        return self.shape[0] == self.shape[1]

    def tolist(self):
        return [[int(x) for x in row] for row in self.data]

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise ArityError("cannot multiply %s by %s"
                             % (self.shape, other.shape))
        return IntMatrix(np.dot(self.data, other.data))

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.tolist() == other.tolist()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.tolist()))

    def det_bareiss(self):
        if not self.is_square():
            raise ArityError("determinant of a %s matrix" % (self.shape,))
        return int(sympy.Matrix(self.tolist()).det(method="bareiss"))

    def inverse(self):
        """
        Exact inverse; only defined for unimodular matrices.
        """
        if abs(self.det_bareiss()) != 1:
            raise ValueError("matrix is not invertible over the integers")
        inv = sympy.Matrix(self.tolist()).inv()
        return IntMatrix([[int(x) for x in inv.row(i)]
                          for i in range(inv.rows)])

    def to_json(self):
        return {"rows": self.tolist()}

    def format(self):
        return "; ".join(" ".join(str(x) for x in row)
                         for row in self.tolist())

    def __repr__(self):
        return "IntMatrix(%s)" % self.format()


def hermite_normal_form(m):
    """
    Row-style Hermite normal form by exact row operations.

    The pivot of each column is the row with the smallest nonzero
    absolute value (lowest index on ties), swapped to the top.

    :return: ``(hnf rows, sign)`` where ``sign`` is the determinant of the
        applied row operations
    """
    a = m.tolist()
    nrows, ncols = len(a), len(a[0])
    sign = 1
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        while True:
            nonzero = [r for r in range(row, nrows) if a[r][col] != 0]
            if not nonzero:
                break
            pivot = min(nonzero, key=lambda r: (abs(a[r][col]), r))
            if pivot != row:
                a[row], a[pivot] = a[pivot], a[row]
                sign = -sign
            cleared = True
            for r in range(row + 1, nrows):
                if a[r][col]:
                    q = a[r][col] // a[row][col]
                    a[r] = [x - q * y for x, y in zip(a[r], a[row])]
                    if a[r][col]:
                        cleared = False
            if cleared:
                break
        if a[row][col] == 0:
            continue
        if a[row][col] < 0:
            a[row] = [-x for x in a[row]]
            sign = -sign
        for r in range(row):
            q = a[r][col] // a[row][col]
            if q:
                a[r] = [x - q * y for x, y in zip(a[r], a[row])]
        row += 1
    return a, sign


def hnf_and_det(m):
    """
    Hermite form and determinant of a square :class:`IntMatrix`.

    :raises InternalCheckError: if the HNF determinant and the Bareiss
        determinant disagree
    """
    if not m.is_square():
        raise ArityError("hnf_and_det needs a square matrix, got %s"
                         % (m.shape,))
    hnf, sign = hermite_normal_form(m)
    det = sign
    for i in range(len(hnf)):
        det *= hnf[i][i]
    bareiss = m.det_bareiss()
    if det != bareiss:
        raise InternalCheckError(
            "determinant mismatch for %s: hnf %d, bareiss %d"
            % (m.format(), det, bareiss))
    return IntMatrix(hnf), det


def in_row_lattice(rows, vector):
    """
    True iff ``vector`` is an integer combination of ``rows``. An empty
    row list spans only the zero vector.
    """
    vector = [int(x) for x in vector]
    rows = [list(row) for row in rows]
    if not rows or all(x == 0 for row in rows for x in row):
        return all(x == 0 for x in vector)
    if any(len(row) != len(vector) for row in rows):
        raise ArityError("rows of length %d cannot span a vector of "
                         "length %d" % (len(rows[0]), len(vector)))
    hnf, _ = hermite_normal_form(IntMatrix(rows))
    residual = list(vector)
    col = 0
    for row in hnf:
        pivot = next((c for c, x in enumerate(row) if x != 0), None)
        if pivot is None:
            break
        if any(residual[c] != 0 for c in range(col, pivot)):
            return False
        if residual[pivot] % row[pivot] != 0:
            return False
        q = residual[pivot] // row[pivot]
        residual = [r - q * x for r, x in zip(residual, row)]
        col = pivot + 1
    return all(x == 0 for x in residual)
