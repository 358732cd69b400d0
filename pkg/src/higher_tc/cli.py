"""
Command-line front end.

    higher-tc graph FILE [--r-max R]        clique invariants, TC_r(BA_G), P(x)
    higher-tc graph --gamma N [--r-max R]   the Gamma_N family, search vs closed form
    higher-tc model FILE [--r-max R] [--truncate D] [--cat C]
    higher-tc seq "prefix=5,9,12 diff=3 stab=2" --cat 3 [--cup 2] [--kind mtc]

Exit codes: 0 success, 2 input error, 3 resource cap, 4 insufficient truncation.
"""

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AlgebraError,
    ContradictionError,
    DomainError,
    InsufficientTruncation,
    ParseError,
    ResourceError,
)
from .genfunc import growth_report, p_at_one_check, parse_sequence, raag_tc_sequence, series_to_P
from .graded_algebra import cup_length, zcl_r
from .graph_core import clique_number, gamma_n, maximal_cliques, parse_graph, z_gamma_closed_form, z_r
from .sullivan import (
    cohomology,
    cohomology_ring,
    is_minimal,
    is_pure_odd,
    kr_power_vanishes,
    mtc_bounds,
    parse_model,
    pure_odd_certificate,
)

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_TRUNCATION = 0, 2, 3, 4
DEFAULT_TENSOR_CAP = 20_000


@dataclass
class Report:
    command: str
    digest: str
    results: list = field(default_factory=list)  # (key, value) in output order
    findings: list = field(default_factory=list)

    def add(self, key, value):
        self.results.append((key, value))

    def render(self, fmt="text"):
        if fmt == "json":
            doc = {
                "command": self.command,
                "inputs": self.digest,
                "results": {k: _jsonable(v) for k, v in self.results},
                "findings": list(self.findings),
            }
            return json.dumps(doc, indent=2, ensure_ascii=False)
        lines = [f"command: {self.command}", f"inputs: {self.digest}"]
        lines += [f"{k}: {_text(v)}" for k, v in self.results]
        lines.append("findings:" + ("" if self.findings else " none"))
        lines += [f"  - {f}" for f in self.findings]
        return "\n".join(lines)


def _text(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_text(k)}: {_text(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return _text(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, bool, str)) or v is None:
        return v
    return str(v)


def _digest(*chunks):
    h = hashlib.sha256()
    for c in chunks:
        h.update(c if isinstance(c, bytes) else str(c).encode())
        h.update(b"\0")
    return "sha256:" + h.hexdigest()[:16]


def _read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def _map(fn, items, parallel):
    if parallel and len(items) > 1:
        with ThreadPoolExecutor() as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def cmd_graph(path, r_max, gamma=None, parallel=False, argv=""):
    if gamma is not None:
        g = gamma_n(gamma)
        rep = Report(argv, _digest("gamma", gamma))
    else:
        text = _read(path)
        g = parse_graph(text)
        rep = Report(argv, _digest(text))
    rs = list(range(2, r_max + 1))
    c = clique_number(g)
    zs = dict(zip(rs, _map(lambda r: z_r(g, r), rs, parallel)))
    rep.add("vertices", g.n)
    rep.add("edges", len(g.edges))
    rep.add("maximal cliques", len(maximal_cliques(g)))
    rep.add("c", c)
    rep.add("z", zs)
    if gamma is not None:
        closed = {r: z_gamma_closed_form(gamma, r) for r in rs}
        rep.add("z closed form", closed)
        rep.add("search equals closed form", closed == zs)
        if closed != zs:
            rep.findings.append("search and closed form disagree")
    rep.add("cat(BA)", c)
    rep.add("TC_r(BA)", zs)
    seq = raag_tc_sequence(g)
    P = series_to_P(seq)
    rep.add("sequence", str(seq))
    rep.add("P", str(P))
    rep.add("P(1)", P(1))
    rep.add("P(1) = cat", "OK" if p_at_one_check(P, c) else "FAIL")
    growth = growth_report(seq, c, 0)
    rep.add("differences", growth.differences)
    rep.findings += [f"{f.kind} at r={f.r}: {f.detail}" for f in growth.findings]
    return rep


def cmd_model(path, r_max, truncate=None, cat=None, parallel=False, tensor_cap=DEFAULT_TENSOR_CAP, argv=""):
    text = _read(path)
    m = parse_model(text)
    rep = Report(argv, _digest(text))
    pure = is_pure_odd(m)
    minimal = is_minimal(m)
    rep.add("generators", [f"{n}:{d}" for n, d in zip(m.names, m.degrees)])
    rep.add("pure odd", pure)
    rep.add("minimal", minimal)
    if not pure and truncate is None:
        raise InsufficientTruncation(
            "model has even-degree generators; pass --truncate D", None
        )
    coh = cohomology(m, truncate)
    rep.add("betti", dict(sorted(coh.dims.items())))
    ring = cohomology_ring(m, truncate)
    rep.add("cohomology basis", [f"{lab} ({d})" for lab, d in zip(ring.labels, ring.degrees)])
    if not ring.complete:
        rep.findings.append(
            f"cohomology truncated at degree {ring.truncation}: cup and zcl are computed on "
            "H^{<=D} and are lower bounds"
        )
    cup = cup_length(ring)
    rep.add("cup", cup)

    zcl = {}
    rs = [r for r in range(2, r_max + 1) if ring.dim**r <= tensor_cap]
    for r in range(2, r_max + 1):
        if r not in rs:
            rep.findings.append(f"zcl_{r} skipped: {ring.dim}^{r} tensor basis exceeds cap {tensor_cap}")
    zcl = dict(zip(rs, _map(lambda r: zcl_r(ring, r, cap=tensor_cap), rs, parallel)))
    rep.add("zcl", zcl)

    if pure and minimal:
        certs = {r: pure_odd_certificate(m, r, verify=False) for r in range(2, r_max + 1)}
        catv = certs[2].cat
        if cat is not None and cat != catv:
            rep.findings.append(f"--cat {cat} ignored: a pure-odd minimal model has cat = dim V = {catv}")
        rep.add("cat", catv)
        rep.add("TC_r = MTC_r", {r: c.value for r, c in certs.items()})
        n = catv  # (r-1) dim V at r = 2
        vanish = kr_power_vanishes(m, 2, n)
        sharp = n == 0 or not kr_power_vanishes(m, 2, n - 1)
        rep.add("K_2 certificate", f"K_2^{n + 1} = 0: {'yes' if vanish else 'NO'}; "
                f"K_2^{n} != 0: {'yes' if sharp else 'no'}")
        if not vanish:
            rep.findings.append("K_2 nilpotency certificate failed")
        bounds = {}
        for r in range(2, r_max + 1):
            b = mtc_bounds(catv, cup, zcl, r, certificate=certs[r])
            bounds[r] = f"[{b.lower}, {b.upper}] exact {b.exact}"
        rep.add("MTC bounds", bounds)
    else:
        if pure and not minimal:
            rep.findings.append("model is pure odd but not minimal; exact values need the minimal model")
        bounds = {}
        for r in range(2, r_max + 1):
            b = mtc_bounds(cat, cup, zcl, r)
            hi = "?" if b.upper is None else b.upper
            bounds[r] = f"[{b.lower}, {hi}]"
        rep.add("MTC bounds", bounds)
    return rep


def cmd_seq(literal, cat, cup=0, kind="tc", argv=""):
    text = _read(literal) if os.path.isfile(literal) else literal
    seq = parse_sequence(text)
    rep = Report(argv, _digest(text, cat, cup, kind))
    P = series_to_P(seq)
    rep.add("sequence", str(seq))
    rep.add("P", str(P))
    rep.add("P(1)", P(1))
    rep.add("P(1) = cat", "OK" if p_at_one_check(P, cat) else "FAIL")
    growth = growth_report(seq, cat, cup, kind=kind)
    rep.add("differences", growth.differences)
    rep.findings += [f"{f.kind} at r={f.r}: {f.detail}" for f in growth.findings]
    return rep


def build_parser():
    p = argparse.ArgumentParser(prog="higher-tc", description="Higher topological complexity workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--parallel", action="store_true", help="evaluate independent r values concurrently")

    g = sub.add_parser("graph", help="clique invariants of a graph")
    g.add_argument("path", nargs="?")
    g.add_argument("--gamma", type=int, metavar="N", help="use the built-in Gamma_N graph")
    g.add_argument("--r-max", type=int, default=4)
    common(g)

    m = sub.add_parser("model", help="invariants of a Sullivan model")
    m.add_argument("path")
    m.add_argument("--r-max", type=int, default=3)
    m.add_argument("--truncate", type=int, metavar="D")
    m.add_argument("--cat", type=int, help="known LS category, for the MTC upper bound")
    m.add_argument("--tensor-cap", type=int, default=DEFAULT_TENSOR_CAP)
    common(m)

    s = sub.add_parser("seq", help="generating function of an eventually arithmetic sequence")
    s.add_argument("literal", help='"prefix=5,9,12 diff=3 stab=2" or a file holding it')
    s.add_argument("--cat", type=int, required=True)
    s.add_argument("--cup", type=int, default=0)
    s.add_argument("--kind", choices=["tc", "mtc"], default="tc")
    common(s)
    return p


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    echo = " ".join(argv)
    try:
        if args.command == "graph":
            if args.gamma is None and args.path is None:
                raise DomainError("give a graph file or --gamma N")
            if args.r_max < 2:
                raise DomainError("--r-max must be at least 2")
            rep = cmd_graph(args.path, args.r_max, args.gamma, args.parallel, echo)
        elif args.command == "model":
            if args.r_max < 2:
                raise DomainError("--r-max must be at least 2")
            rep = cmd_model(args.path, args.r_max, args.truncate, args.cat, args.parallel,
                            args.tensor_cap, echo)
        else:
            rep = cmd_seq(args.literal, args.cat, args.cup, args.kind, echo)
    except InsufficientTruncation as e:
        need = f" (required degree: {e.required_degree})" if e.required_degree is not None else ""
        print(f"error: insufficient truncation: {e}{need}", file=sys.stderr)
        return EXIT_TRUNCATION
    except ResourceError as e:
        print(f"error: resource cap: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, DomainError, AlgebraError, ContradictionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.render(args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
