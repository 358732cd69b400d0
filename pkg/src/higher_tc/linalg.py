"""
Exact sparse linear algebra over the rationals.

Vectors are dicts ``{column: Fraction}`` with no zero entries. Everything
here is plain Gaussian elimination; no floating point is ever involved.
"""

from fractions import Fraction


def clean(v):
    return {k: c for k, c in v.items() if c}


def axpy(y, a, x):
    """y += a*x in place (sparse)."""
    for k, c in x.items():
        s = y.get(k, 0) + a * c
        if s:
            y[k] = s
        else:
            y.pop(k, None)
    return y


def scale(a, v):
    if not a:
        return {}
    return {k: a * c for k, c in v.items()}


class Echelon:
    """
    Incrementally maintained row-echelon basis.

    Each stored row has leading coefficient 1 at its pivot, which is the
    smallest column of the row. ``add`` returns True when the vector was
    independent of what was stored before.
    """

    def __init__(self):
        self.rows = {}  # pivot column -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        """Return v minus its component along the stored rows (v unchanged)."""
        v = dict(v)
        rows = self.rows
        if not rows or not v:
            return v
        # subtracting a row only introduces columns right of its pivot
        while True:
            cands = [k for k in v if k in rows]
            if not cands:
                return v
            c = min(cands)
            axpy(v, -v[c], rows[c])

    def add(self, v):
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / Fraction(r[p])
        self.rows[p] = {k: c * inv for k, c in r.items()}
        return True

    def contains(self, v):
        return not self.reduce(v)

    def to_rref(self):
        """Back-substitute into reduced row-echelon form, rows sorted by pivot."""
        pivots = sorted(self.rows)
        rows = {p: dict(self.rows[p]) for p in pivots}
        for p in reversed(pivots):
            row = rows[p]
            for q in pivots:
                if q < p and p in rows[q]:
                    axpy(rows[q], -rows[q][p], row)
        return [rows[p] for p in pivots]


class Subspace:
    """
    Finite-dimensional subspace of Q^ambient held in reduced row-echelon form.

    Rows are sorted by pivot column, every pivot entry is 1 and every other
    row is zero in that column, so the representation is canonical and
    membership is exact.
    """

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, vectors=()):
        ech = Echelon()
        for v in vectors:
            for k in v:
                if not 0 <= k < ambient:
                    raise IndexError(f"column {k} outside ambient dimension {ambient}")
            ech.add(v)
        self.ambient = ambient
        self.rows = ech.to_rref()
        self.pivots = [min(r) for r in self.rows]

    @classmethod
    def _from_rref(cls, ambient, rows):
        self = cls.__new__(cls)
        self.ambient = ambient
        self.rows = rows
        self.pivots = [min(r) for r in rows]
        return self

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def reduce(self, v):
        """Residue of v after clearing every pivot column."""
        v = dict(v)
        for p, row in zip(self.pivots, self.rows):
            c = v.get(p)
            if c:
                axpy(v, -c, row)
        return v

    def contains(self, v):
        return not self.reduce(v)

    def coordinates(self, v):
        """Coefficients of v in the row basis; raises ValueError if v is outside."""
        coords = [v.get(p, Fraction(0)) for p in self.pivots]
        residue = dict(v)
        for c, row in zip(coords, self.rows):
            if c:
                axpy(residue, -c, row)
        if residue:
            raise ValueError("vector is not in the subspace")
        return coords

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def kernel_and_image(images, n_source, n_target):
    """
    Kernel and image of the linear map sending e_i to ``images[i]``.

    Returns ``(kernel, image)`` as Subspaces of Q^n_source and Q^n_target.
    The kernel is found by carrying the source combination alongside each
    reduced image vector.
    """
    pivot_rows = {}  # pivot -> (image row, source combination)
    kernel = []
    for i in range(n_source):
        img = dict(images[i])
        combo = {i: Fraction(1)}
        while img:
            cands = [k for k in img if k in pivot_rows]
            if not cands:
                break
            c = min(cands)
            a = img[c]
            row, rc = pivot_rows[c]
            axpy(img, -a, row)
            axpy(combo, -a, rc)
        if img:
            p = min(img)
            inv = 1 / Fraction(img[p])
            pivot_rows[p] = (scale(inv, img), scale(inv, combo))
        else:
            kernel.append(combo)
    ker = Subspace(n_source, kernel)
    im = Subspace(n_target, [row for row, _ in pivot_rows.values()])
    return ker, im
