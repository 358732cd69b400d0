"""
Generating functions of eventually arithmetic sequences.

A sequence t_1, t_2, ... (t_r = TC_{r+1}) that is arithmetic from some
index on has F(x) = sum t_r x^r = P(x) / (1 - x)^2 with P an integer
polynomial, and P(1) equals the eventual common difference.
"""

import re
from dataclasses import dataclass, field

from .errors import DomainError, ParseError
from .graph_core import clique_number, maximal_cliques, stabilization_bound, z_gamma_closed_form, z_r


class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first, no trailing zeros."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        c = [int(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self):
        return IntPolynomial(-a for a in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self):
        parts = []
        for k, a in enumerate(self.coefficients):
            if not a:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append((" - " if a < 0 else " + ") + body)
        return "".join(parts) or "0"


ONE_MINUS_X_SQUARED = IntPolynomial([1, -2, 1])


def expand_over_one_minus_x_squared(P, terms):
    """First ``terms`` coefficients (x^1 .. x^terms) of P(x)/(1-x)^2."""
    c = P.coefficients
    # 1/(1-x)^2 = sum (j+1) x^j
    return [sum(a * (r - k + 1) for k, a in enumerate(c) if k <= r) for r in range(1, terms + 1)]


@dataclass(frozen=True)
class TCSequence:
    """
    t_1..t_m given explicitly, then t_{r+1} = t_r + diff for r >= stab.

    The declared tail must agree with the prefix: t_{r+1} - t_r = diff for
    stab <= r < m.
    """

    prefix: tuple
    diff: int
    stab: int

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(t) for t in self.prefix))
        m = len(self.prefix)
        if m == 0:
            raise DomainError("prefix must contain at least one term")
        if not 1 <= self.stab <= m:
            raise DomainError(f"stabilization index {self.stab} must lie in 1..{m}")
        if any(t < 0 for t in self.prefix):
            raise DomainError("sequence terms must be nonnegative")
        for r in range(self.stab, m):
            if self.prefix[r] - self.prefix[r - 1] != self.diff:
                raise DomainError(
                    f"t_{r + 1} - t_{r} = {self.prefix[r] - self.prefix[r - 1]} "
                    f"disagrees with the declared difference {self.diff} (first violation at r = {r})"
                )

    def term(self, r):
        if r < 1:
            raise DomainError("terms are indexed from r = 1")
        m = len(self.prefix)
        if r <= m:
            return self.prefix[r - 1]
        return self.prefix[-1] + (r - m) * self.diff

    def terms(self, k):
        return [self.term(r) for r in range(1, k + 1)]

    def __add__(self, other):
        m = max(len(self.prefix), len(other.prefix))
        return TCSequence(
            [self.term(r) + other.term(r) for r in range(1, m + 1)],
            self.diff + other.diff,
            max(self.stab, other.stab),
        )

    def __str__(self):
        return f"prefix={','.join(map(str, self.prefix))} diff={self.diff} stab={self.stab}"


def make_sequence(prefix, diff, stab):
    return TCSequence(tuple(prefix), diff, stab)


_LITERAL = re.compile(r"^\s*prefix=(?P<p>-?\d+(?:\s*,\s*-?\d+)*)\s+diff=(?P<d>-?\d+)\s+stab=(?P<s>\d+)\s*$")


def parse_sequence(text):
    """Parse ``prefix=5,9,12 diff=3 stab=2``."""
    lines = [l for l in text.splitlines() if l.strip() and not l.strip().startswith("#")]
    if len(lines) != 1:
        raise ParseError("expected exactly one sequence line")
    m = _LITERAL.match(lines[0])
    if not m:
        raise ParseError(f"cannot parse sequence literal {lines[0].strip()!r}", 1)
    prefix = [int(t) for t in m.group("p").split(",")]
    try:
        return make_sequence(prefix, int(m.group("d")), int(m.group("s")))
    except DomainError as e:
        raise ParseError(str(e), 1) from e


def series_to_P(seq):
    """
    P(x) = (1 - x)^2 F(x), exactly.

    Coefficients are second differences of t (t_0 = t_{-1} = 0); they vanish
    past stab + 1 because the tail is arithmetic. The result is re-expanded
    and compared against the sequence before returning.
    """
    t = [0, 0] + [seq.term(r) for r in range(1, seq.stab + 2)]
    coeffs = [0] + [t[k + 1] - 2 * t[k] + t[k - 1] for k in range(1, seq.stab + 2)]
    P = IntPolynomial(coeffs)
    n = len(seq.prefix) + 3
    if expand_over_one_minus_x_squared(P, n) != seq.terms(n):
        raise AssertionError("P(x)/(1-x)^2 does not reproduce the sequence")
    return P


def p_at_one_check(P, cat):
    return P(1) == cat


def gamma_sequence(n):
    """TC_{r+1}(BA_{Gamma_n}) from the closed form; arithmetic with difference n+1 from r = n."""
    prefix = [z_gamma_closed_form(n, r + 1) for r in range(1, n + 2)]
    return make_sequence(prefix, n + 1, n)


def gamma_degree_check(n):
    """P for Gamma_n, together with the check deg P = n + 1 = P(1)."""
    P = series_to_P(gamma_sequence(n))
    return P, P.degree == n + 1 and P(1) == n + 1


def raag_tc_sequence(g):
    """
    TC_{r+1}(BA_g) as a TCSequence, with z_r computed by search.

    The tail is declared from a proved bound (see
    :func:`~higher_tc.graph_core.stabilization_bound`), never guessed.
    """
    c = clique_number(g)
    r0 = stabilization_bound(g)
    stab = max(1, r0 - 1)
    prefix = [z_r(g, r + 1) for r in range(1, stab + 2)]
    return make_sequence(prefix, c, stab)


@dataclass
class Finding:
    kind: str
    r: int
    detail: str


@dataclass
class GrowthReport:
    differences: dict  # r -> t_r - t_{r-1} = TC_{r+1} - TC_r
    stable_difference: int
    findings: list = field(default_factory=list)


def growth_report(seq, cat, cup, kind="tc", upto=None):
    """
    Difference table TC_{r+1} - TC_r for r >= 2, with findings.

    Any difference above cat is an instability witness. For ``kind="mtc"``
    each difference must lie in [cup, 2 cat]; violations are findings, not
    exceptions.
    """
    if cup < 0 or cat < cup:
        raise DomainError(f"need cat >= cup >= 0, got cat={cat}, cup={cup}")
    if kind not in ("tc", "mtc"):
        raise DomainError(f"kind must be 'tc' or 'mtc', got {kind!r}")
    upto = upto or len(seq.prefix) + 2
    diffs = {}
    findings = []
    for r in range(2, upto + 1):
        # t_r = TC_{r+1}, t_{r-1} = TC_r
        diffs[r] = seq.term(r) - seq.term(r - 1)
        if diffs[r] > cat:
            findings.append(Finding("instability", r, f"TC_{r + 1} - TC_{r} = {diffs[r]} > cat = {cat}"))
        if kind == "mtc" and not cup <= diffs[r] <= 2 * cat:
            findings.append(
                Finding("bound-violation", r, f"difference {diffs[r]} outside [{cup}, {2 * cat}]")
            )
    if seq.diff != cat:
        findings.append(
            Finding("eventual-difference", seq.stab, f"eventual difference {seq.diff} != cat = {cat}")
        )
    return GrowthReport(diffs, seq.diff, findings)
