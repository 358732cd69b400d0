"""
Finite-dimensional graded-commutative algebras over Q.

An algebra is a homogeneous basis with structure constants. Tensor powers
use the Koszul sign rule

    (a_1 (x) ... (x) a_r)(b_1 (x) ... (x) b_r)
        = (-1)^(sum_{i>j} |a_i||b_j|) a_1 b_1 (x) ... (x) a_r b_r

and every subspace computation is done one total degree at a time.
"""

import logging
from fractions import Fraction
from itertools import product

from .errors import AlgebraError, DomainError, ParseError, ResourceError
from .linalg import Echelon, Subspace, axpy, kernel_and_image
from .parsing import format_sum, parse_terms, split_lines

log = logging.getLogger(__name__)

TENSOR_CAP = 10**6
# exhaustive tensor-power self-checks above these sizes are left to the tests
_COMMUTATIVITY_CHECK_LIMIT = 10**5
_ASSOCIATIVITY_CHECK_LIMIT = 10**5


class Element:
    """Sparse linear combination of basis elements of a fixed algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise DomainError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, axpy(dict(self.terms), -1, other.terms))

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, {k: c * other for k, c in self.terms.items()})
        return multiply(self.algebra, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def degrees(self):
        return {self.algebra.degrees[k] for k in self.terms}

    @property
    def is_homogeneous(self):
        return len(self.degrees) <= 1

    @property
    def degree(self):
        """Degree of a nonzero homogeneous element; None for zero or mixed elements."""
        ds = self.degrees
        return next(iter(ds)) if len(ds) == 1 else None

    def __repr__(self):
        labels = self.algebra.labels
        return format_sum((c, labels[k]) for k, c in sorted(self.terms.items()))


class GradedAlgebra:
    """
    Graded-commutative algebra given by basis labels, degrees and a product table.

    Build instances with :func:`make_algebra`, which validates the axioms.
    ``_table[(i, j)]`` is the product of basis elements i and j as a sparse
    dict; missing keys mean zero.
    """

    def __init__(self, labels, degrees, unit, table):
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.unit = unit
        self._table = table
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._by_degree = {}
        for i, d in enumerate(self.degrees):
            self._by_degree.setdefault(d, []).append(i)

    @property
    def dim(self):
        return len(self.labels)

    @property
    def top_degree(self):
        return max(self.degrees)

    def indices_in_degree(self, d):
        return self._by_degree.get(d, [])

    def present_degrees(self):
        return sorted(self._by_degree)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis element {label!r}") from None

    def basis_element(self, key):
        i = key if isinstance(key, int) else self.index(key)
        return Element(self, {i: 1})

    def one(self):
        return Element(self, {self.unit: 1})

    def zero(self):
        return Element(self, {})

    def element(self, terms):
        """Element from ``{label_or_index: coefficient}``."""
        out = {}
        for k, c in terms.items():
            i = k if isinstance(k, int) else self.index(k)
            out[i] = out.get(i, 0) + Fraction(c)
        return Element(self, out)

    def mul_basis(self, i, j):
        return self._table.get((i, j), {})

    def product_vec(self, a, b):
        """Bilinear product on raw sparse dicts."""
        out = {}
        for i, ci in a.items():
            for j, cj in b.items():
                p = self.mul_basis(i, j)
                if p:
                    axpy(out, ci * cj, p)
        return out

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dim}, degrees={sorted(set(self.degrees))})"


def _koszul_sign(da, db):
    return -1 if (da * db) % 2 else 1


def validate(alg, pairs=True, associativity=True):
    """
    Check unit, degree additivity, graded commutativity and associativity.

    ``pairs`` covers the checks over basis pairs (degrees, commutativity).
    """
    n = alg.dim
    deg = alg.degrees
    zero_deg = alg.indices_in_degree(0)
    if zero_deg != [alg.unit]:
        raise AlgebraError(
            f"degree-0 component must be spanned by the unit, found {[alg.labels[i] for i in zero_deg]}"
        )
    if any(d < 0 for d in deg):
        raise AlgebraError("degrees must be nonnegative")
    for i in range(n):
        if alg.mul_basis(alg.unit, i) != {i: 1} or alg.mul_basis(i, alg.unit) != {i: 1}:
            raise AlgebraError(f"unit law fails on {alg.labels[i]!r}")
    if pairs:
        for i, j in product(range(n), repeat=2):
            for k in alg.mul_basis(i, j):
                if deg[k] != deg[i] + deg[j]:
                    raise AlgebraError(
                        f"product {alg.labels[i]}*{alg.labels[j]} has a term "
                        f"{alg.labels[k]} of degree {deg[k]}, expected {deg[i] + deg[j]}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                s = _koszul_sign(deg[i], deg[j])
                pij = alg.mul_basis(i, j)
                pji = alg.mul_basis(j, i)
                if pij != {k: s * c for k, c in pji.items()}:
                    raise AlgebraError(
                        f"graded commutativity fails on ({alg.labels[i]}, {alg.labels[j]})"
                    )
        for i in range(n):
            if deg[i] % 2 and alg.mul_basis(i, i):
                raise AlgebraError(f"odd element {alg.labels[i]} squares to a nonzero element")
    if associativity:
        top = alg.top_degree
        pos = [i for i in range(n) if i != alg.unit]
        for i in pos:
            for j in pos:
                if deg[i] + deg[j] > top:
                    continue
                ij = alg.mul_basis(i, j)
                for k in pos:
                    if deg[i] + deg[j] + deg[k] > top:
                        continue
                    left = alg.product_vec(ij, {k: 1})
                    right = alg.product_vec({i: 1}, alg.mul_basis(j, k))
                    if left != right:
                        raise AlgebraError(
                            "associativity fails on "
                            f"({alg.labels[i]}, {alg.labels[j]}, {alg.labels[k]})"
                        )
    return alg


def make_algebra(basis, products, unit=None):
    """
    Build and validate a graded-commutative algebra.

    ``basis`` is a list of ``(label, degree)``. ``products`` maps pairs of
    labels (or indices) to an Element-like ``{label: coefficient}`` dict;
    missing pairs are zero except products with the unit, which are filled
    in. ``unit`` defaults to the first degree-0 basis element.

    >>> H = make_algebra([("1", 0), ("x", 3)], {})
    >>> cup_length(H)
    1
    """
    labels = [lab for lab, _ in basis]
    degrees = [int(d) for _, d in basis]
    if len(set(labels)) != len(labels):
        raise AlgebraError("basis labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}

    def idx(k):
        if isinstance(k, int):
            if not 0 <= k < len(labels):
                raise AlgebraError(f"basis index {k} out of range")
            return k
        if k not in index:
            raise AlgebraError(f"unknown basis label {k!r}")
        return index[k]

    if unit is None:
        zeros = [i for i, d in enumerate(degrees) if d == 0]
        if not zeros:
            raise AlgebraError("no degree-0 basis element to serve as unit")
        unit = zeros[0]
    else:
        unit = idx(unit)

    table = {}
    for (a, b), val in products.items():
        i, j = idx(a), idx(b)
        if isinstance(val, Element):
            terms = {val.algebra.labels[k]: c for k, c in val.terms.items()}
        else:
            terms = val
        vec = {}
        for k, c in terms.items():
            kk = idx(k)
            vec[kk] = vec.get(kk, 0) + Fraction(c)
        vec = {k: c for k, c in vec.items() if c}
        if vec:
            table[(i, j)] = vec
    for i in range(len(labels)):
        for key in ((unit, i), (i, unit)):
            if key in table and table[key] != {i: 1}:
                raise AlgebraError(f"unit law fails on {labels[i]!r}")
            table[key] = {i: Fraction(1)}
    return validate(GradedAlgebra(labels, degrees, unit, table))


def parse_algebra(text):
    """
    Algebra file: ``b <label> <degree>`` lines declare the basis (the first
    degree-0 element is the unit), ``p <a> <b> = <linear combination>``
    lines give products. Unlisted products are zero.
    """
    basis = []
    prods = {}
    labels = set()
    for no, raw in split_lines(text):
        s = raw.strip()
        head = s.split(None, 1)[0]
        if head == "b":
            parts = s.split()
            if len(parts) != 3:
                raise ParseError("expected 'b <label> <degree>'", no)
            try:
                d = int(parts[2])
            except ValueError:
                raise ParseError(f"degree must be an integer, got {parts[2]!r}", no)
            if parts[1] in labels:
                raise ParseError(f"basis label {parts[1]!r} declared twice", no)
            labels.add(parts[1])
            basis.append((parts[1], d))
        elif head == "p":
            lhs, eq, rhs = s.partition("=")
            if not eq:
                raise ParseError("expected 'p <a> <b> = <combination>'", no)
            parts = lhs.split()
            if len(parts) != 3:
                raise ParseError("expected 'p <a> <b> = <combination>'", no)
            a, b = parts[1], parts[2]
            for lab in (a, b):
                if lab not in labels:
                    raise ParseError(f"unknown basis label {lab!r}", no)
            if (a, b) in prods:
                raise ParseError(f"product {a}*{b} given twice", no)
            col0 = raw.index("=") + 2
            vec = {}
            for coeff, names, col in parse_terms(rhs, no, col0):
                if not names:
                    if coeff:
                        raise ParseError("constant term in a product of positive-degree elements", no, col)
                    continue
                if len(names) != 1 or names[0][1] != 1:
                    raise ParseError("each term must be a coefficient times one basis label", no, col)
                lab = names[0][0]
                if lab not in labels:
                    raise ParseError(f"unknown basis label {lab!r}", no, col)
                vec[lab] = vec.get(lab, 0) + coeff
            prods[(a, b)] = vec
        else:
            raise ParseError(f"unrecognised line {s!r}", no)
    if not basis:
        raise ParseError("no basis declared")
    try:
        return make_algebra(basis, prods)
    except AlgebraError as e:
        raise ParseError(str(e)) from e


def multiply(H, a, b):
    if not isinstance(a, Element) or not isinstance(b, Element):
        raise TypeError("multiply expects Elements")
    if a.algebra is not H or b.algebra is not H:
        raise DomainError("element does not belong to this algebra")
    return Element(H, H.product_vec(a.terms, b.terms))


class TensorPowerAlgebra(GradedAlgebra):
    """
    r-fold tensor power of a base algebra with Koszul-signed products.

    The basis is all r-tuples of base indices, enumerated in mixed radix
    with the first factor most significant. Products are computed on demand
    from the base table and cached per instance.
    """

    def __init__(self, base, r):
        self.base = base
        self.r = r
        n = base.dim
        tuples = list(product(range(n), repeat=r))
        labels = [
            "⊗".join(base.labels[i] for i in t) for t in tuples
        ]
        degrees = [sum(base.degrees[i] for i in t) for t in tuples]
        self.tuples = tuples
        unit = self.encode((base.unit,) * r)
        super().__init__(labels, degrees, unit, {})

    def encode(self, t):
        n = self.base.dim
        k = 0
        for i in t:
            k = k * n + i
        return k

    def mul_basis(self, i, j):
        key = (i, j)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        if self.degrees[i] + self.degrees[j] > self.top_degree:
            self._table[key] = {}
            return {}
        a, b = self.tuples[i], self.tuples[j]
        bdeg = self.base.degrees
        # b_pos moves left across a_{pos+1}, ..., a_r
        sign = 0
        suffix = 0
        for pos in range(self.r - 1, -1, -1):
            sign += bdeg[b[pos]] * suffix
            suffix += bdeg[a[pos]]
        # expand the factorwise products
        terms = {(): Fraction(-1 if sign % 2 else 1)}
        for pos in range(self.r):
            p = self.base.mul_basis(a[pos], b[pos])
            if not p:
                terms = {}
                break
            terms = {t + (k,): c * ck for t, c in terms.items() for k, ck in p.items()}
        out = {}
        for t, c in terms.items():
            if c:
                out[self.encode(t)] = out.get(self.encode(t), 0) + c
        out = {k: c for k, c in out.items() if c}
        self._table[key] = out
        return out

    def mu(self, i):
        """Image of basis tuple i under the r-fold multiplication into the base."""
        vec = {self.tuples[i][0]: Fraction(1)}
        for k in self.tuples[i][1:]:
            vec = self.base.product_vec(vec, {k: 1})
        return vec


def tensor_power(H, r, cap=TENSOR_CAP):
    if r < 2:
        raise DomainError(f"tensor power needs r >= 2, got {r}")
    size = H.dim**r
    if size > cap:
        raise ResourceError(f"tensor power has {H.dim}^{r} = {size} basis elements, cap is {cap}")
    T = TensorPowerAlgebra(H, r)
    validate(
        T,
        pairs=T.dim**2 <= _COMMUTATIVITY_CHECK_LIMIT,
        associativity=T.dim**3 <= _ASSOCIATIVITY_CHECK_LIMIT,
    )
    return T


def mu_r(T, e):
    """The multiplication map (x)^r H -> H applied to an Element of T."""
    out = {}
    for i, c in e.terms.items():
        axpy(out, c, T.mu(i))
    return Element(T.base, out)


class GradedSubspace:
    """
    Subspace of an algebra stored degree by degree.

    ``parts[d]`` is a :class:`~higher_tc.linalg.Subspace` of the span of
    basis elements of degree d, with columns numbered by position in
    ``algebra.indices_in_degree(d)``. Zero parts are dropped.
    """

    def __init__(self, algebra, parts):
        self.algebra = algebra
        self.parts = {d: s for d, s in sorted(parts.items()) if not s.is_zero()}

    @classmethod
    def from_vectors(cls, algebra, vectors):
        """Span of arbitrary homogeneous vectors (sparse dicts over global indices)."""
        by_deg = {}
        for v in vectors:
            if not v:
                continue
            ds = {algebra.degrees[k] for k in v}
            if len(ds) != 1:
                raise DomainError("spanning vectors must be homogeneous")
            by_deg.setdefault(ds.pop(), []).append(v)
        parts = {}
        for d, vecs in by_deg.items():
            cols = {k: n for n, k in enumerate(algebra.indices_in_degree(d))}
            parts[d] = Subspace(len(cols), [{cols[k]: c for k, c in v.items()} for v in vecs])
        return cls(algebra, parts)

    @property
    def dim(self):
        return sum(s.dim for s in self.parts.values())

    def dim_in_degree(self, d):
        s = self.parts.get(d)
        return s.dim if s else 0

    def is_zero(self):
        return not self.parts

    def degrees(self):
        return list(self.parts)

    def basis(self, degree=None):
        """Basis vectors as sparse dicts over global algebra indices."""
        out = []
        for d, s in self.parts.items():
            if degree is not None and d != degree:
                continue
            idx = self.algebra.indices_in_degree(d)
            out += [{idx[c]: v for c, v in row.items()} for row in s.rows]
        return out

    def basis_elements(self):
        return [Element(self.algebra, v) for v in self.basis()]

    def contains(self, e):
        terms = e.terms if isinstance(e, Element) else e
        by_deg = {}
        for k, c in terms.items():
            by_deg.setdefault(self.algebra.degrees[k], {})[k] = c
        for d, v in by_deg.items():
            s = self.parts.get(d)
            if s is None:
                return False
            pos = {k: n for n, k in enumerate(self.algebra.indices_in_degree(d))}
            if not s.contains({pos[k]: c for k, c in v.items()}):
                return False
        return True

    def min_degree(self):
        return min(self.parts) if self.parts else None

    def __repr__(self):
        dims = {d: s.dim for d, s in self.parts.items()}
        return f"GradedSubspace(dims={dims})"


def augmentation_ideal(H):
    return GradedSubspace.from_vectors(H, [{i: 1} for i in range(H.dim) if H.degrees[i] > 0])


def mult_kernel(H, r, cap=TENSOR_CAP):
    """Kernel of the r-fold multiplication (x)^r H -> H, computed degreewise."""
    T = H if isinstance(H, TensorPowerAlgebra) and H.r == r else tensor_power(H, r, cap)
    base = T.base
    parts = {}
    for d in T.present_degrees():
        src = T.indices_in_degree(d)
        tgt = {k: n for n, k in enumerate(base.indices_in_degree(d))}
        images = [{tgt[k]: c for k, c in T.mu(i).items()} for i in src]
        ker, _ = kernel_and_image(images, len(src), len(tgt))
        parts[d] = ker
    return GradedSubspace(T, parts)


def product_subspace(A, B, prune=True):
    """
    Span of all products a*b with a, b running over bases of A and B.

    ``prune`` skips degree pairs landing above the top degree and stops
    feeding a degree once it is full; without it every pair is multiplied.
    Both give the same subspace.
    """
    alg = A.algebra
    if B.algebra is not alg:
        raise DomainError("subspaces live in different algebras")
    top = alg.top_degree
    ech = {}
    bvecs = [(d, B.basis(d)) for d in B.degrees()]
    for da in A.degrees():
        avecs = A.basis(da)
        for db, bs in bvecs:
            d = da + db
            target = alg.indices_in_degree(d)
            if prune and (d > top or not target):
                continue
            e = ech.setdefault(d, Echelon())
            for a in avecs:
                if prune and len(e) == len(target):
                    break
                for b in bs:
                    p = alg.product_vec(a, b)
                    if p:
                        e.add(p)
    parts = {}
    for d, e in ech.items():
        if not len(e):
            continue
        cols = {k: n for n, k in enumerate(alg.indices_in_degree(d))}
        rows = [{cols[k]: c for k, c in row.items()} for row in e.rows.values()]
        parts[d] = Subspace(len(cols), rows)
    return GradedSubspace(alg, parts)


def subspace_power(K, n, prune=True):
    """n-th power K^n: span of all n-fold products of elements of K."""
    if n < 1:
        raise DomainError("power must be at least 1")
    P = K
    for _ in range(n - 1):
        if P.is_zero():
            return P
        P = product_subspace(P, K, prune=prune)
    return P


def _power_exponent(K, prune=True):
    """Greatest n with K^n != 0 (0 when K is zero)."""
    if K.is_zero():
        return 0
    if K.min_degree() == 0:
        raise DomainError("subspace meets degree 0; its powers need not vanish")
    n = 1
    P = K
    while True:
        Q = product_subspace(P, K, prune=prune)
        if Q.is_zero():
            return n
        P = Q
        n += 1


def ideal_power_nonzero(H, K, n, prune=True):
    """True iff some product of n elements of K is nonzero."""
    alg = K.algebra
    if alg is not H and getattr(alg, "base", None) is not H:
        raise DomainError("subspace does not live in H or a tensor power of H")
    if n < 1:
        raise DomainError("n must be at least 1")
    return not subspace_power(K, n, prune=prune).is_zero()


def cup_length(H):
    """Greatest n with a nonzero product of n positive-degree elements."""
    return _power_exponent(augmentation_ideal(H))


def zcl_r(H, r, prune=True, cap=TENSOR_CAP):
    """r-th zero-divisor cup-length: nilpotency exponent of ker(mu_r), minus one."""
    return _power_exponent(mult_kernel(H, r, cap), prune=prune)


def zcl_superadditivity_check(H, r, cap=TENSOR_CAP):
    """zcl_{r+1}(H) >= zcl_r(H) + cup(H); a False result is logged as a bug signal."""
    a = zcl_r(H, r, cap=cap)
    b = zcl_r(H, r + 1, cap=cap)
    c = cup_length(H)
    ok = b >= a + c
    if not ok:
        log.warning("zcl superadditivity fails: zcl_%d=%d, zcl_%d=%d, cup=%d", r + 1, b, r, a, c)
    return ok
