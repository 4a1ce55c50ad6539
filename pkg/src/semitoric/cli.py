"""Command-line interface; every subcommand prints canonical JSON."""
from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import checks
from . import grassmann as gr
from . import polytopes as pt
from .hibi import hibi_ideal_generators, monomial_exponents, relations_to_json
from .poset import Poset, _hashable, _jsonable, ideals_to_lattice, maximal_chains
from .serialize import dumps
from .valuations import Family, chain_valuation, quasi_valuation

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64

COMMANDS = ("lattice", "chains", "hibi-ideal", "valuate", "quasi", "straighten", "governed",
            "no-body", "fflv", "beta", "triangulate", "transfer", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semitoric", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--poset", help="JSON file with 'elements' and 'covers' ([lower, upper] pairs)")
    p.add_argument("--family", default="spec", choices=["spec", "maxspec", "ht", "mu"])
    p.add_argument("--chain", help="index into the chain enumeration, or ';'-separated elements")
    p.add_argument("--pair", help="two elements separated by ',', e.g. 14,23")
    p.add_argument("--monomial", help="';'-separated factors, e.g. 14;23;23")
    p.add_argument("--dilation", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-elements", type=int, default=64)
    p.add_argument("--max-chains", type=int, default=100_000)
    return p


class Target:
    """The lattice selected by --d/--n or --poset."""

    def __init__(self, args):
        if args.poset and (args.d is not None or args.n is not None):
            raise UsageError("give either --d/--n or --poset, not both")
        if args.poset:
            with open(args.poset) as fh:
                self.lattice = ideals_to_lattice(Poset.from_json(json.load(fh)))
            self.d = self.n = None
        elif args.d is not None and args.n is not None:
            self.d, self.n = args.d, args.n
            if not 1 <= self.d <= self.n:
                raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
            if comb(self.n, self.d) > args.max_elements:
                raise ValueError(f"I({self.d},{self.n}) has {comb(self.n, self.d)} elements, "
                                 f"over the cap {args.max_elements}")
            self.lattice = gr.build_idn(self.d, self.n)
        else:
            raise UsageError("a target is required: --d and --n, or --poset")
        if len(self.lattice) > args.max_elements:
            raise ValueError(f"lattice has {len(self.lattice)} elements, over the cap {args.max_elements}")
        count = 0
        for _ in maximal_chains(self.lattice):
            count += 1
            if count > args.max_chains:
                raise ValueError(f"more than {args.max_chains} maximal chains")
        self._chains = None

    @property
    def grassmann(self) -> bool:
        return self.d is not None

    def need_grassmann(self, cmd):
        if not self.grassmann:
            raise UsageError(f"'{cmd}' needs --d and --n")

    @property
    def chains(self):
        if self._chains is None:
            self._chains = list(maximal_chains(self.lattice))
        return self._chains

    def element(self, text: str) -> int:
        L = self.lattice
        text = text.strip()
        if self.grassmann:
            parts = text.split(".") if "." in text else list(text)
            try:
                label = tuple(int(x) for x in parts)
            except ValueError:
                raise ValueError(f"cannot read Plücker index {text!r}") from None
        else:
            try:
                label = json.loads(text)
            except json.JSONDecodeError:
                raise ValueError(f"cannot read element {text!r}; use a JSON list of poset elements") from None
            if not isinstance(label, list):
                raise ValueError(f"element {text!r} must be a JSON list (an order ideal)")
            by_set = {frozenset(lab): i for i, lab in enumerate(L.labels)}
            key = frozenset(_hashable(x) for x in label)
            if key not in by_set:
                raise ValueError(f"{text} is not an order ideal of the poset")
            return by_set[key]
        return L.index(label)

    def chain(self, text):
        if text is None:
            return self.chains[0]
        if text.strip().lstrip("-").isdigit():
            k = int(text)
            if not 0 <= k < len(self.chains):
                raise ValueError(f"chain index {k} out of range 0..{len(self.chains) - 1}")
            return self.chains[k]
        chain = tuple(self.element(t) for t in text.split(";"))
        self.lattice.check_maximal_chain(chain)
        return chain

    def label(self, x):
        return _jsonable(self.lattice.labels[x])

    def chain_labels(self, c):
        return [self.label(x) for x in c]


def _monomial(target, args):
    if not args.monomial:
        raise UsageError("--monomial is required")
    return tuple(target.element(t) for t in args.monomial.split(";"))


def _value_json(v):
    return {"order": v.order.value, "value": list(v.coords)}


def run_command(args) -> tuple[object, int]:
    cmd = args.command
    t = Target(args)
    L = t.lattice
    if cmd == "lattice":
        out = L.to_json()
        if t.grassmann:
            out["irreducibleFamilies"] = [{"element": t.label(m), "s": c.s, "t": c.t, "kind": c.kind}
                                          for m in L.irreducibles
                                          for c in [gr.classify_irreducible(L.labels[m])]]
        return out, EXIT_OK
    if cmd == "chains":
        return [{"index": k, "chain": t.chain_labels(c)} for k, c in enumerate(t.chains)], EXIT_OK
    if cmd == "hibi-ideal":
        return relations_to_json(L, hibi_ideal_generators(L)), EXIT_OK
    if cmd in ("valuate", "quasi"):
        mon = _monomial(t, args)
        if args.family == "mu":
            t.need_grassmann("--family mu")
            ring = gr.grassmann_ring(t.d, t.n)
            if cmd == "valuate":
                c = t.chain(args.chain)
                return {"family": "mu", "chain": t.chain_labels(c),
                        **_value_json(ring.mu_chain(c, mon))}, EXIT_OK
            v, arg = ring.mu_quasi(mon)
            return {"family": "mu", **_value_json(v),
                    "argminChains": [t.chain_labels(c) for c in arg]}, EXIT_OK
        y = monomial_exponents(L, mon)
        if cmd == "valuate":
            c = t.chain(args.chain)
            v = chain_valuation(L, c, args.family).value(y)
            return {"family": args.family, "chain": t.chain_labels(c), **_value_json(v)}, EXIT_OK
        v, arg = quasi_valuation(L, Family(args.family), y)
        return {"family": args.family, **_value_json(v),
                "argminChains": [t.chain_labels(c) for c in arg]}, EXIT_OK
    if cmd == "straighten":
        t.need_grassmann(cmd)
        if args.pair:
            parts = args.pair.split(",")
            if len(parts) != 2:
                raise UsageError("--pair takes two elements separated by ','")
            a, b = (t.element(x) for x in parts)
            terms = gr.straighten(t.d, t.n, L.labels[a], L.labels[b])
            tab = gr.StraighteningTable(t.d, t.n, {(min(a, b), max(a, b)): terms})
            return tab.to_json()[0], EXIT_OK
        return gr.straightening_table(t.d, t.n, args.jobs).to_json(), EXIT_OK
    if cmd == "governed":
        t.need_grassmann(cmd)
        rep = gr.governed_check(gr.straightening_table(t.d, t.n, args.jobs))
        return {"passed": rep.passed, "pairs": rep.to_json()}, EXIT_OK if rep.passed else EXIT_VERIFY
    if cmd == "no-body":
        t.need_grassmann(cmd)
        c = t.chain(args.chain)
        body = pt.no_body(t.d, t.n, c)
        out = body.to_json(with_points=False)
        out["chain"] = t.chain_labels(c)
        out["dilation"] = args.dilation
        out["latticePoints"] = [list(p) for p in body.lattice_points(args.dilation)]
        return out, EXIT_OK
    if cmd == "fflv":
        t.need_grassmann(cmd)
        P = pt.fflv_polytope(t.d, t.n)
        out = P.to_json(with_points=False)
        out["dilation"] = args.dilation
        out["latticePoints"] = [list(p) for p in P.lattice_points(args.dilation)]
        out["dyckPaths"] = [[list(r) for r in p.roots] for p in pt.dyck_paths(t.d, t.n)]
        return out, EXIT_OK
    if cmd == "beta":
        t.need_grassmann(cmd)
        return [{"element": t.label(x), "roots": [list(r) for r in b.roots], "chi": list(b.chi)}
                for x in range(len(L)) for b in [pt.beta(L.labels[x], t.n)]], EXIT_OK
    if cmd == "triangulate":
        t.need_grassmann(cmd)
        simplices = pt.triangulate(t.d, t.n)
        return {"coordinates": [list(r) for r in gr.root_poset(t.d, t.n).labels],
                "simplices": {";".join("".join(map(str, L.labels[x])) if t.n < 10 else
                                       ".".join(map(str, L.labels[x])) for x in s.chain):
                              {"vertices": [list(v) for v in s.vertices],
                               "normalizedVolume": s.normalized_volume()}
                              for s in simplices},
                "totalVolume": sum(s.normalized_volume() for s in simplices)}, EXIT_OK
    if cmd == "transfer":
        t.need_grassmann(cmd)
        rows = []
        for I in L.labels:
            x = pt.ideal_point(t.d, t.n, I)
            rows.append({"element": list(I), "orderPoint": list(x),
                         "fflvPoint": list(pt.transfer(t.d, t.n, x))})
        return rows, EXIT_OK
    if cmd == "verify":
        if t.grassmann:
            results = checks.grassmann_checks(t.d, t.n, args.jobs)
        else:
            results = checks.lattice_checks(L) + checks.hibi_checks(L)
        ok = all(r.ok for r in results)
        return {"passed": ok, "checks": results}, EXIT_OK if ok else EXIT_VERIFY
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = run_command(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"semitoric: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, KeyError, OSError) as exc:
        print(f"semitoric: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = dumps(out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
