"""
Tokenizer and term grammar shared by the algebra and Sullivan model files.

    expr   := [sign] term (sign term)*
    term   := factor ("*" factor)*
    factor := NUMBER | NAME ["^" INTEGER]

NUMBER is an integer or a fraction ``p/q``. Juxtaposition is not a product:
``xy`` is a single name.
"""

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^]))"
)


def tokenize(text, line=None, col0=1):
    text = text.replace("−", "-")
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", line, col0 + bad)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), col0 + start))
        pos = m.end()
    return toks


def parse_terms(text, line=None, col0=1):
    """
    Parse a signed sum of products.

    Returns a list of ``(coefficient, [(name, exponent), ...], column)``.
    Repeated names inside one term are kept in order of appearance; the
    caller decides what a product of names means.
    """
    toks = tokenize(text, line, col0)
    if not toks:
        raise ParseError("empty expression", line, col0)
    i = 0
    terms = []

    def peek():
        return toks[i] if i < len(toks) else (None, None, col0 + len(text))

    while True:
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif terms:
            raise ParseError(f"expected '+' or '-' before {val!r}", line, col)
        term_col = peek()[2]
        coeff = Fraction(sign)
        names = []
        while True:
            kind, val, col = peek()
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "name":
                i += 1
                exp = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    i += 1
                    k2, v2, c2 = peek()
                    if k2 != "num" or "/" in v2:
                        raise ParseError("exponent must be a nonnegative integer", line, c2)
                    exp = int(v2)
                    i += 1
                names.append((val, exp))
            else:
                what = "end of input" if kind is None else repr(val)
                raise ParseError(f"expected a number or a name, got {what}", line, col)
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                continue
            break
        terms.append((coeff, names, term_col))
        if i >= len(toks):
            return terms
        kind, val, col = peek()
        if not (kind == "op" and val in "+-"):
            raise ParseError(f"unexpected {val!r}", line, col)


def split_lines(text):
    """Yield ``(line_number, stripped_line)`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield no, raw


def format_coeff(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_sum(pairs):
    """Render ``[(coefficient, label), ...]`` as ``2*x - 1/2*y``; label '' is a constant."""
    out = []
    for c, label in pairs:
        c = Fraction(c)
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        if label == "":
            body = format_coeff(a)
        elif a == 1:
            body = label
        else:
            body = f"{format_coeff(a)}*{label}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"
