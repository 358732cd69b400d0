"""
Finitely generated Sullivan models (ΛV, d) over Q.

Elements of ΛV are sparse dicts ``{exponent_vector: Fraction}``; odd
generators carry exponent 0 or 1. Monomials are ordered products of
generators in declaration order, so ``x*z`` is stored as (1, 0, 1) and a
product of monomials picks up the sign of reordering odd factors.

The tensor power (ΛV)^(x)r is itself free on r copies of V, with copy i of
v written v(i); the Koszul rule is then just the free graded-commutative
sign rule.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import AlgebraError, ContradictionError, DomainError, InsufficientTruncation, ParseError, ResourceError
from .graded_algebra import make_algebra
from .linalg import Echelon, Subspace, axpy, kernel_and_image
from .parsing import format_sum, parse_terms, split_lines

MONOMIAL_CAP = 50_000


class FreeGCA:
    """Free graded-commutative algebra on named homogeneous generators."""

    def __init__(self, names, degrees):
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be distinct")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.odd = tuple(d % 2 == 1 for d in degrees)
        self._index = {n: i for i, n in enumerate(names)}
        self._monos = {}
        self._short_names = all(len(n) == 1 for n in names)

    @property
    def ngens(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def generator(self, i):
        e = [0] * self.ngens
        e[i] = 1
        return {tuple(e): Fraction(1)}

    def one(self):
        return {(0,) * self.ngens: Fraction(1)}

    def is_finite(self):
        return all(self.odd)

    def top_degree(self):
        """Top degree of ΛV when every generator is odd, else None."""
        return sum(self.degrees) if self.is_finite() else None

    def mono_degree(self, e):
        return sum(k * d for k, d in zip(e, self.degrees))

    def degree(self, p):
        ds = {self.mono_degree(e) for e in p}
        if len(ds) != 1:
            raise DomainError("element is zero or not homogeneous")
        return ds.pop()

    def mul_mono(self, a, b):
        """Return (sign, a+b) or None when an odd generator would be squared."""
        odd = self.odd
        parity = 0
        passed = 0  # odd factors of a to the right of the current position
        for i in range(self.ngens - 1, -1, -1):
            if odd[i]:
                if a[i] and b[i]:
                    return None
                parity += b[i] * passed
                passed += a[i]
        c = tuple(x + y for x, y in zip(a, b))
        return (-1 if parity % 2 else 1), c

    def mul(self, p, q):
        out = {}
        for a, ca in p.items():
            for b, cb in q.items():
                r = self.mul_mono(a, b)
                if r is None:
                    continue
                s, c = r
                v = out.get(c, 0) + s * ca * cb
                if v:
                    out[c] = v
                else:
                    out.pop(c, None)
        return out

    def monomials(self, d, cap=MONOMIAL_CAP):
        """Monomials of degree d, exponent vectors in descending lexicographic order."""
        if d in self._monos:
            return self._monos[d]
        out = []
        n = self.ngens

        def rec(i, left, acc):
            if len(out) > cap:
                raise ResourceError(f"more than {cap} monomials in degree {d}")
            if i == n:
                if left == 0:
                    out.append(tuple(acc))
                return
            deg = self.degrees[i]
            hi = min(1, left // deg) if self.odd[i] else left // deg
            for k in range(hi, -1, -1):
                acc.append(k)
                rec(i + 1, left - k * deg, acc)
                acc.pop()

        if d >= 0:
            rec(0, d, [])
        self._monos[d] = out
        return out

    def format_mono(self, e):
        parts = []
        for name, k in zip(self.names, e):
            if k:
                parts.append(name if k == 1 else f"{name}^{k}")
        if not parts:
            return "1"
        return ("" if self._short_names else "*").join(parts)

    def format(self, p):
        items = sorted(p.items(), key=lambda t: (self.mono_degree(t[0]), tuple(-x for x in t[0])))
        return format_sum((c, "" if not any(e) else self.format_mono(e)) for e, c in items)

    def parse(self, text, line=None, col0=1):
        """Parse a polynomial over these generators (shared term grammar)."""
        out = {}
        for coeff, names, col in parse_terms(text, line, col0):
            e = [0] * self.ngens
            sign = 1
            for name, k in names:
                if name not in self._index:
                    raise ParseError(f"unknown generator {name!r}", line, col)
                i = self._index[name]
                if self.odd[i] and (k > 1 or e[i]):
                    raise ParseError(f"odd generator {name!r} squared", line, col)
                g = [0] * self.ngens
                g[i] = k
                s, e2 = self.mul_mono(tuple(e), tuple(g))
                sign *= s
                e = list(e2)
            axpy(out, coeff * sign, {tuple(e): Fraction(1)})
        return out


def _word(e):
    """Monomial as the ordered list of generator indices it multiplies out."""
    w = []
    for i, k in enumerate(e):
        w += [i] * k
    return w


class SullivanModel:
    """
    (ΛV, d) with d given on generators and extended as a derivation.

    Construct with :func:`make_model` or :func:`parse_model`; both check
    degrees, simple connectivity (generator degrees >= 2) and d∘d = 0.
    """

    def __init__(self, algebra, dgen):
        self.algebra = algebra
        self.dgen = tuple(dgen)  # d of generator i, as a polynomial
        self._dcache = {}

    @property
    def names(self):
        return self.algebra.names

    @property
    def degrees(self):
        return self.algebra.degrees

    @property
    def dim_v(self):
        return self.algebra.ngens

    def d_mono(self, e):
        hit = self._dcache.get(e)
        if hit is not None:
            return hit
        A = self.algebra
        out = {}
        w = _word(e)
        n = A.ngens
        for pos, g in enumerate(w):
            dg = self.dgen[g]
            if not dg:
                continue
            left = [0] * n
            for i in w[:pos]:
                left[i] += 1
            right = [0] * n
            for i in w[pos + 1:]:
                right[i] += 1
            sign = -1 if A.mono_degree(left) % 2 else 1
            term = A.mul(A.mul({tuple(left): Fraction(sign)}, dg), {tuple(right): Fraction(1)})
            axpy(out, 1, term)
        self._dcache[e] = out
        return out

    def d(self, p):
        out = {}
        for e, c in p.items():
            axpy(out, c, self.d_mono(e))
        return out

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"SullivanModel({gens})"


def make_model(generators, differential=None):
    """
    Build a validated model.

    ``generators`` is a list of ``(name, degree)``; ``differential`` maps a
    generator name to a polynomial string or dict. Omitted differentials are 0.
    """
    names = [n for n, _ in generators]
    degrees = [int(d) for _, d in generators]
    for n, d in zip(names, degrees):
        if d < 2:
            raise AlgebraError(f"generator {n!r} has degree {d}; degrees must be >= 2")
    A = FreeGCA(names, degrees)
    dgen = [{} for _ in names]
    for name, val in (differential or {}).items():
        if name not in A._index:
            raise AlgebraError(f"differential given for unknown generator {name!r}")
        p = A.parse(val) if isinstance(val, str) else {k: Fraction(c) for k, c in val.items() if c}
        dgen[A.index(name)] = p
    _check_model(A, dgen)
    return SullivanModel(A, dgen)


def _check_model(A, dgen, lines=None):
    lines = lines or {}
    for i, p in enumerate(dgen):
        want = A.degrees[i] + 1
        for e in p:
            if A.mono_degree(e) != want:
                raise ParseError(
                    f"d {A.names[i]} has a term {A.format_mono(e)} of degree "
                    f"{A.mono_degree(e)}, expected {want}",
                    lines.get(i),
                )
    m = SullivanModel(A, dgen)
    for i, p in enumerate(dgen):
        dd = m.d(p)
        if dd:
            raise AlgebraError(
                f"d(d {A.names[i]}) = {A.format(dd)} is not zero"
                + (f" (line {lines[i]})" if i in lines else "")
            )


def parse_model(text):
    """
    Model file::

        gen x 3
        gen z 5
        d z = x*y

    Generators are collected first, so ``d`` lines may appear anywhere.
    """
    gens = []
    dlines = []
    seen = {}
    for no, raw in split_lines(text):
        s = raw.strip()
        head = s.split(None, 1)[0]
        if head == "gen":
            parts = s.split()
            if len(parts) != 3:
                raise ParseError("expected 'gen <name> <degree>'", no)
            name = parts[1]
            try:
                deg = int(parts[2])
            except ValueError:
                raise ParseError(f"degree must be an integer, got {parts[2]!r}", no)
            if name in seen:
                raise ParseError(f"generator {name!r} declared twice", no)
            if deg < 2:
                raise ParseError(f"generator {name!r} has degree {deg}; degrees must be >= 2", no)
            seen[name] = no
            gens.append((name, deg))
        elif head == "d":
            lhs, eq, rhs = s.partition("=")
            parts = lhs.split()
            if not eq or len(parts) != 2:
                raise ParseError("expected 'd <name> = <polynomial>'", no)
            col0 = raw.index("=") + 2
            dlines.append((no, parts[1], rhs, col0))
        else:
            raise ParseError(f"unrecognised line {s!r}", no)
    A = FreeGCA([n for n, _ in gens], [d for _, d in gens])
    dgen = [{} for _ in gens]
    lines = {}
    for no, name, rhs, col0 in dlines:
        if name not in seen:
            raise ParseError(f"differential of undeclared generator {name!r}", no)
        i = A.index(name)
        if i in lines:
            raise ParseError(f"differential of {name!r} given twice", no)
        lines[i] = no
        dgen[i] = A.parse(rhs, no, col0)
    _check_model(A, dgen, lines)
    return SullivanModel(A, dgen)


def apply_d(m, e):
    """The differential on an element given as a dict or a polynomial string."""
    if isinstance(e, str):
        e = m.algebra.parse(e)
    return m.d(e)


def is_pure_odd(m):
    return all(m.algebra.odd)


def is_minimal(m):
    """True when no differential has a linear (single-generator) term."""
    return all(sum(e) >= 2 for p in m.dgen for e in p)


@dataclass
class Cohomology:
    """Betti numbers and representative cocycles through ``up_to``."""

    model: SullivanModel
    up_to: int
    dims: dict
    representatives: dict  # degree -> list of polynomials
    _boundaries: dict = field(default_factory=dict, repr=False)
    _reps_space: dict = field(default_factory=dict, repr=False)

    def betti(self, d):
        if d > self.up_to:
            raise InsufficientTruncation(
                f"cohomology computed through degree {self.up_to}, degree {d} requested", d
            )
        return self.dims.get(d, 0)

    def euler_characteristic(self):
        return sum((-1) ** d * k for d, k in self.dims.items())

    def class_of(self, p):
        """Coordinates of a homogeneous cocycle in the representative basis."""
        if not p:
            return []
        A = self.model.algebra
        d = A.degree(p)
        if d > self.up_to:
            raise InsufficientTruncation(
                f"cohomology computed through degree {self.up_to}, degree {d} requested", d
            )
        if self.model.d(p):
            raise DomainError(f"{A.format(p)} is not a cocycle")
        cols = {e: k for k, e in enumerate(A.monomials(d))}
        v = {cols[e]: c for e, c in p.items()}
        v = self._boundaries[d].reduce(v)
        return self._reps_space[d].coordinates(v)


def _d_matrix(m, d):
    A = m.algebra
    src = A.monomials(d)
    tgt = {e: k for k, e in enumerate(A.monomials(d + 1))}
    images = []
    for e in src:
        images.append({tgt[f]: c for f, c in m.d_mono(e).items()})
    return images, len(src), len(tgt)


def cohomology(m, up_to_degree=None):
    """
    Cohomology through ``up_to_degree`` with echelon representatives.

    Representatives are cocycles reduced against the coboundaries and put in
    reduced row-echelon form over the monomial order, so whenever a class
    has a monomial representative that monomial is the one chosen.
    """
    A = m.algebra
    D = up_to_degree
    if D is None:
        D = A.top_degree()
        if D is None:
            raise InsufficientTruncation(
                "model has even generators; a truncation degree is required"
            )
    dims, reps, bnd, rsp = {}, {}, {}, {}
    prev_image = None
    for d in range(0, D + 1):
        images, ns, nt = _d_matrix(m, d)
        ker, im = kernel_and_image(images, ns, nt)
        # image of the previous differential = coboundaries in degree d
        B = prev_image if prev_image is not None else Subspace(ns, [])
        residues = [B.reduce(z) for z in ker.rows]
        R = Subspace(ns, [r for r in residues if r])
        monos = A.monomials(d)
        if R.dim:
            dims[d] = R.dim
            reps[d] = [{monos[k]: c for k, c in row.items()} for row in R.rows]
        bnd[d] = B
        rsp[d] = R
        prev_image = im
    return Cohomology(m, D, dims, reps, bnd, rsp)


def _class_label(A, p, used):
    if len(p) == 1:
        (e, c), = p.items()
        if c == 1:
            label = A.format_mono(e)
            if label not in used:
                return label
    label = f"[{A.format(p)}]"
    k = 2
    base = label
    while label in used:
        label = f"{base}#{k}"
        k += 1
    return label


def cohomology_ring(m, up_to_degree=None):
    """
    The cohomology algebra on representative classes, as a GradedAlgebra.

    For a pure-odd model the default covers every degree and the ring is
    exact. With even generators a truncation degree D is required; the
    result is H^{<=D}, and any nonzero product of classes landing above D
    raises InsufficientTruncation naming that degree.

    The returned algebra carries ``representatives`` (label -> cocycle) and
    ``complete`` (True when no truncation was involved).
    """
    A = m.algebra
    top = A.top_degree()
    D = up_to_degree
    if D is None:
        if top is None:
            raise InsufficientTruncation(
                "model has even generators; a truncation degree is required"
            )
        D = top
    reach = 2 * D if top is None else min(2 * D, top)
    reach = max(reach, D)
    coh = cohomology(m, reach)

    basis, reps = [], []
    used = set()
    for d in sorted(coh.representatives):
        if d > D:
            continue
        for p in coh.representatives[d]:
            label = _class_label(A, p, used)
            used.add(label)
            basis.append((label, d))
            reps.append(p)
    offsets = {}
    k = 0
    for d in sorted(coh.representatives):
        if d <= D:
            offsets[d] = k
            k += len(coh.representatives[d])

    def express(p):
        if not p:
            return {}
        d = A.degree(p)
        if d > coh.up_to:
            # beyond the computed range only happens for pure-odd models past the top
            raise InsufficientTruncation(f"product lands in degree {d}", d)
        coords = coh.class_of(p)
        if d > D:
            if any(coords):
                raise InsufficientTruncation(
                    f"a product of classes is nonzero in degree {d} > truncation {D}", d
                )
            return {}
        return {offsets[d] + i: c for i, c in enumerate(coords) if c}

    n = len(basis)
    products = {}
    for i in range(n):
        for j in range(n):
            if basis[i][1] == 0 or basis[j][1] == 0:
                continue
            v = express(A.mul(reps[i], reps[j]))
            if v:
                products[(i, j)] = v

    # well-definedness guard: shift each representative by a coboundary
    for i in range(n):
        d = basis[i][1]
        if d == 0:
            continue
        shift = next((m.d_mono(e) for e in A.monomials(d - 1) if m.d_mono(e)), None)
        if shift is None:
            continue
        alt = axpy(dict(reps[i]), 1, shift)
        for j in range(n):
            if basis[j][1] == 0:
                continue
            if express(A.mul(alt, reps[j])) != products.get((i, j), {}):
                raise AlgebraError(
                    f"cup product depends on the representative of {basis[i][0]}"
                )

    ring = make_algebra(basis, products)
    ring.representatives = dict(zip([b[0] for b in basis], reps))
    ring.complete = top is not None and D >= top
    ring.truncation = D
    return ring


def _require_pure_odd_minimal(m):
    if not is_pure_odd(m):
        raise DomainError("model has even-degree generators; only pure-odd models are supported")
    if not is_minimal(m):
        raise DomainError("model is not minimal (some differential has a linear term)")


def cat_pure_odd(m):
    """LS category of a pure-odd minimal model: the number of generators."""
    _require_pure_odd_minimal(m)
    return m.dim_v


def tc_mtc_pure_odd(m, r):
    """TC_r = MTC_r = (r - 1) cat for a pure-odd minimal model."""
    if r < 2:
        raise DomainError(f"r must be at least 2, got {r}")
    return (r - 1) * cat_pure_odd(m)


@dataclass(frozen=True)
class KrIdeal:
    """Generators v(i) - v(i+1) of ker(mu_r) inside the free algebra on r copies of V."""

    r: int
    algebra: FreeGCA
    generators: tuple
    labels: tuple


def tensor_free_algebra(m, r):
    """(ΛV)^(x)r as the free algebra on generators v(1), ..., v(r), copy-major."""
    names = [f"{n}({i})" for i in range(1, r + 1) for n in m.names]
    return FreeGCA(names, list(m.degrees) * r)


def kr_generators(m, r):
    if r < 2:
        raise DomainError(f"r must be at least 2, got {r}")
    T = tensor_free_algebra(m, r)
    n = m.dim_v
    gens, labels = [], []
    for i in range(1, r):
        for v, name in enumerate(m.names):
            a = (i - 1) * n + v
            g = axpy(T.generator(a), -1, T.generator(a + n))
            gens.append(g)
            labels.append(f"{name}({i}) - {name}({i + 1})")
    return KrIdeal(r, T, tuple(gens), tuple(labels))


def mu_r(m, r, p):
    """The multiplication (ΛV)^(x)r -> ΛV on an element of the tensor free algebra."""
    A = m.algebra
    n = m.dim_v
    out = {}
    for e, c in p.items():
        acc = A.one()
        for i in range(r):
            acc = A.mul(acc, {tuple(e[i * n:(i + 1) * n]): Fraction(1)})
        axpy(out, c, acc)
    return out


def _all_monomials(T, cap):
    total = 2 ** T.ngens
    if total > cap:
        raise ResourceError(f"(ΛV)^(x)r has {total} monomials, cap is {cap}")
    out = []
    for d in range(T.top_degree() + 1):
        out += T.monomials(d)
    return out


def kr_ideal_powers(m, r, k, cap=MONOMIAL_CAP):
    """
    Dimensions of K_r, K_r^2, ..., K_r^k, stopping early at the first zero power.

    K_r^1 is spanned by g*w (g an ideal generator, w a monomial); each next
    power is spanned by g*u with u running over a basis of the previous one.
    """
    _require_pure_odd(m)
    K = kr_generators(m, r)
    T = K.algebra
    monos = _all_monomials(T, cap)
    index = {e: i for i, e in enumerate(monos)}

    def span(vectors):
        ech = Echelon()
        for p in vectors:
            if p:
                ech.add({index[e]: c for e, c in p.items()})
        return [{monos[i]: c for i, c in row.items()} for row in ech.rows.values()]

    current = span(T.mul(g, {w: Fraction(1)}) for g in K.generators for w in monos)
    dims = [len(current)]
    while len(dims) < k and current:
        current = span(T.mul(g, u) for g in K.generators for u in current)
        dims.append(len(current))
    return dims


def _require_pure_odd(m):
    if not is_pure_odd(m):
        raise DomainError(
            "K_r powers are only computed for pure-odd models "
            "(even generators make (ΛV)^(x)r infinite-dimensional)"
        )


def kr_power_vanishes(m, r, n, cap=MONOMIAL_CAP):
    """True iff K_r^(n+1) = 0 in (ΛV)^(x)r."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    dims = kr_ideal_powers(m, r, n + 1, cap)
    return len(dims) < n + 1 or dims[n] == 0


def kr_power_vanishes_bruteforce(m, r, n):
    """Independent check: every product of n+1 ideal generators is zero."""
    _require_pure_odd(m)
    K = kr_generators(m, r)
    T = K.algebra
    for combo in combinations_with_replacement(K.generators, n + 1):
        p = T.one()
        for g in combo:
            p = T.mul(p, g)
            if not p:
                break
        if p:
            return False
    return True


@dataclass(frozen=True)
class PureOddCertificate:
    """Exact TC_r = MTC_r for a pure-odd minimal model, with the K_r check result."""

    r: int
    cat: int
    value: int
    nilpotency_verified: bool = None


def pure_odd_certificate(m, r, verify=True, cap=MONOMIAL_CAP):
    cat = cat_pure_odd(m)
    value = tc_mtc_pure_odd(m, r)
    checked = None
    if verify:
        try:
            checked = kr_power_vanishes(m, r, value, cap)
        except ResourceError:
            checked = None
    return PureOddCertificate(r, cat, value, checked)


@dataclass(frozen=True)
class MtcBounds:
    r: int
    lower: int
    upper: int = None  # None when cat is unknown
    exact: int = None


def mtc_bounds(cat, cup, zcl=None, r=2, certificate=None):
    """
    Interval for MTC_r from the proved inequalities.

    lower: (r-1) cat, zcl_r, and zcl_s + (r-s) cup for every known s < r
    (each step r -> r+1 adds at least cup). upper: r cat.

    ``cat`` may be None when only the cup-length is known; cat >= cup then
    still gives the lower bound (r-1) cup and the upper bound is left open.
    ``certificate`` is an exact pure-odd value (int or PureOddCertificate).
    """
    if r < 2:
        raise DomainError(f"r must be at least 2, got {r}")
    if cup < 0 or (cat is not None and cat < cup):
        raise ContradictionError(f"need cat >= cup >= 0, got cat={cat}, cup={cup}")
    zcl = dict(zcl or {})
    base = cat if cat is not None else cup
    candidates = [(r - 1) * base]
    for s, z in zcl.items():
        if 2 <= s <= r:
            candidates.append(z + (r - s) * cup)
    lower = max(candidates)
    upper = r * cat if cat is not None else None
    if upper is not None and lower > upper:
        raise ContradictionError(f"lower bound {lower} exceeds upper bound {upper} at r={r}")
    exact = None
    if certificate is not None:
        exact = certificate.value if isinstance(certificate, PureOddCertificate) else int(certificate)
        if isinstance(certificate, PureOddCertificate) and certificate.r != r:
            raise DomainError(f"certificate is for r={certificate.r}, not r={r}")
        if exact < lower or (upper is not None and exact > upper):
            raise ContradictionError(
                f"exact value {exact} outside the proved interval [{lower}, {upper}]"
            )
    return MtcBounds(r, lower, upper, exact)

