"""Command-line front end.

Every command prints ``key: value`` lines with polynomials in canonical form.
Exit codes: 0 computed, 2 parse/usage error, 3 mathematical precondition
violated, 4 S-pair limit exceeded. Any flag value of the form ``@path`` is
read from that file.
"""

import argparse
import sys

from . import __version__
from .autcore import PolyMap, compose, verify_inverse
from .construct import construct
from .coordcheck import coordinate_test_2var, coordinate_test_z, fiber_slice, slice_report
from .derivation import Derivation, exp_map, lnd_check
from .errors import ArityError, ArityMismatch, ParseError, PreconditionError, StepLimitExceeded
from .groebner import MAX_PAIRS_ENV, buchberger
from .modring import check_inverse_pair, invert_mod_p
from .polycore import X, Y, Z
from .tame import decompose, equivalence_report, linear_determinant, nagata
from .textio import parse_components, parse_map, parse_poly, print_canonical, print_map

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_STEP_LIMIT = 0, 2, 3, 4


class _Input:
    """A flag value; ``@path`` values are read from the file on first use."""

    def __init__(self, flag, raw):
        self.flag = flag
        self.raw = raw
        self._text = None

    @property
    def text(self):
        if self._text is None:
            if self.raw.startswith("@"):
                with open(self.raw[1:], encoding="utf-8") as fh:
                    self._text = fh.read().strip()
            else:
                self._text = self.raw
        return self._text


def _read(flag, value):
    return _Input(flag, value)


def _poly(inp):
    try:
        return parse_poly(inp.text)
    except ParseError as exc:
        exc.flag = inp.flag
        raise


def _map(inp):
    try:
        return parse_map(inp.text)
    except ParseError as exc:
        exc.flag = inp.flag
        raise


def _bool(v):
    return "true" if v else "false"


class _Out:
    def __init__(self, stream):
        self.stream = stream

    def __call__(self, key, value):
        if not isinstance(value, str):
            if isinstance(value, bool):
                value = _bool(value)
            elif isinstance(value, PolyMap):
                value = print_map(value)
            elif value is None:
                value = "none"
            elif hasattr(value, "items"):
                value = print_canonical(value)
            else:
                value = str(value)
        self.stream.write(f"{key}: {value}\n")


# -- commands ---------------------------------------------------------------


def cmd_construct(args, out):
    p, a = _poly(args.p), _poly(args.a)
    b = _poly(args.b) if args.b else None
    res = construct(p, a, b)
    out("p", p)
    out("a", a)
    out("b", res.input.b)
    out("b-source", "supplied" if b is not None else "computed")
    for k in ("f1", "f2", "g1", "g2"):
        out(k, getattr(res, k))
    out("inverse-verified", verify_inverse(res.F, res.G))


def cmd_invert_mod_p(args, out):
    p, a = _poly(args.p), _poly(args.a)
    b = invert_mod_p(a, p)
    out("b", b)
    out("inverse-pair", check_inverse_pair(a, b, p))


def cmd_compose(args, out):
    out("result", compose(_map(args.F), _map(args.G)))


def cmd_verify_inverse(args, out):
    out("inverse", verify_inverse(_map(args.F), _map(args.G)))


def cmd_classify(args, out):
    p, a = _poly(args.p), _poly(args.a)
    b = _poly(args.b) if args.b else None
    rep = equivalence_report(p, a, b)
    v = rep.verdict
    out("verdict", v.verdict.value)
    out("d1", v.d1)
    out("e1", v.e1)
    if v.detail is not None:
        s = v.detail
        for key in ("a0", "a1", "a_tilde", "b_tilde", "c", "d"):
            out(key.replace("_", "-"), getattr(s, key))
    out("tame-3var-over-k", rep.statements["(f1, f2, z) in T(3, k)"])
    out("tame-2var-over-kz", rep.statements["(f1, f2) in T(2, k[z])"])
    out("tame-1var-mod-p", rep.statements["a in T(1, k[z]/(p))"])
    out("degree-one-mod-p", rep.statements["deg_x a mod p == 1"])
    for note in rep.notes:
        out("note", note)


def cmd_decompose(args, out):
    p, a = _poly(args.p), _poly(args.a)
    b = _poly(args.b) if args.b else None
    cert = decompose(p, a, b)
    for i, f in enumerate(cert.factors, 1):
        out(f"factor-{i}", f)
    out("target", cert.target)
    out("linear-determinant", linear_determinant(cert))
    out("recomposes", cert.verify())


def cmd_nagata(args, out):
    n = nagata()
    for i, c in enumerate(n.sigma, 1):
        out(f"sigma-{i}", c)
    c = n.construction
    out("p", c.input.p)
    out("a", c.input.a)
    out("b", c.input.b)
    for k in ("f1", "f2", "g1", "g2"):
        out(k, getattr(c, k))
    out("inverse-verified", verify_inverse(c.F, c.G))
    out("remark23-identity", n.remark_identity())
    D = Derivation.from_images(-2 * Y, Z)
    out("exp-identity", exp_map(D, X * Z + Y**2) == n.sigma)


def _print_coord(report, out):
    out("verdict", report.verdict.value)
    out("lnd", report.lnd_ok)
    out("unimodular", report.unimodular_ok)
    out("degree-bound", report.degree_bound)
    if report.nilpotency.witness is not None:
        var, it = report.nilpotency.witness
        out("witness-variable", var)
        out("witness-iterate", it)


def cmd_coord_test(args, out):
    _print_coord(coordinate_test_z(_poly(args.f), max_pairs=args.max_pairs), out)


def cmd_coord_test_2var(args, out):
    _print_coord(coordinate_test_2var(_poly(args.f), max_pairs=args.max_pairs), out)


def _derivation(inp):
    try:
        comps = parse_components(inp.text)
    except ParseError as exc:
        exc.flag = inp.flag
        raise
    if len(comps) not in (2, 3):
        raise ArityError(f"a derivation needs 2 or 3 images, got {len(comps)}")
    return Derivation(*comps) if len(comps) == 3 else Derivation(comps[0], comps[1])


def cmd_lnd_check(args, out):
    rep = lnd_check(_derivation(args.D), args.bound)
    out("is-lnd", rep.is_lnd)
    out("bound", rep.bound_used)
    if rep.witness is not None:
        out("witness-variable", rep.witness[0])
        out("witness-iterate", rep.witness[1])


def cmd_exp(args, out):
    out("result", exp_map(_derivation(args.D), _poly(args.s)))


def cmd_groebner_contains_one(args, out):
    gens = [_poly(g) for g in args.g]
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        out("contains-one", False)
        return
    basis = buchberger(nonzero, max_pairs=args.max_pairs)
    out("contains-one", basis.is_unit())
    for i, g in enumerate(basis.generators, 1):
        out(f"basis-{i}", g)


def cmd_prop31(args, out):
    f = _poly(args.f)
    at = _poly(args.at)
    if not at.is_constant():
        raise ValueError("--at must be a rational number")
    rep = slice_report(f, at.constant_value(), max_pairs=args.max_pairs)
    out("slice-value", print_canonical(at))
    out("slice", fiber_slice(f, rep.slice_value))
    out("slice-coordinate", rep.slice_coordinate_ok)
    out("z-coordinate", rep.z_coordinate_ok)
    out("hypothesis", rep.hypothesis_note)
    out("conclusion", rep.conclusion)


# -- parser -----------------------------------------------------------------


def _add(sub, name, func, help_text):
    p = sub.add_parser(name, help=help_text)
    p.set_defaults(func=func)
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="polyaut", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--max-pairs",
        type=int,
        default=None,
        help=f"S-pair cap for Groebner computations (env {MAX_PAIRS_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_flag(p, *names, required=True, help=None):
        p.add_argument(*names, required=required, type=lambda v, n=names[-1]: _read(n, v), help=help)

    p = _add(sub, "construct", cmd_construct, "build (f1, f2) and its inverse from p, a[, b]")
    poly_flag(p, "-p", help="modulus p in z")
    poly_flag(p, "-a", help="a(z, x)")
    poly_flag(p, "-b", required=False, help="inverse of a modulo p (computed if omitted)")

    p = _add(sub, "invert-mod-p", cmd_invert_mod_p, "inverse of a(z, x) modulo p")
    poly_flag(p, "-p")
    poly_flag(p, "-a")

    for name, func, text in (
        ("compose", cmd_compose, "F o G, i.e. F with G substituted"),
        ("verify-inverse", cmd_verify_inverse, "check F o G = G o F = id"),
    ):
        p = _add(sub, name, func, text)
        poly_flag(p, "-F", help="map, e.g. '(x; y + x^2)'")
        poly_flag(p, "-G")

    for name, func in (("classify", cmd_classify), ("decompose", cmd_decompose)):
        p = _add(sub, name, func, f"{name} the map built from p, a[, b]")
        poly_flag(p, "-p")
        poly_flag(p, "-a")
        poly_flag(p, "-b", required=False)

    _add(sub, "nagata", cmd_nagata, "the Nagata automorphism and its checks")

    p = _add(sub, "coord-test", cmd_coord_test, "is f a coordinate of Q[z][x, y]?")
    poly_flag(p, "-f")
    p = _add(sub, "coord-test-2var", cmd_coord_test_2var, "is f a coordinate of Q[x, y]?")
    poly_flag(p, "-f")

    p = _add(sub, "lnd-check", cmd_lnd_check, "bounded local nilpotency check")
    poly_flag(p, "-D", help="derivation images '(Dx; Dy[; Dz])'")
    p.add_argument("--bound", type=int, required=True)

    p = _add(sub, "exp", cmd_exp, "exp(s*D) for s in the kernel of D")
    poly_flag(p, "-D")
    poly_flag(p, "-s")

    p = _add(sub, "groebner-contains-one", cmd_groebner_contains_one, "decide 1 in (g1, ..., gk)")
    p.add_argument("-g", action="append", required=True, type=lambda v: _read("-g", v))

    p = _add(sub, "prop31", cmd_prop31, "slice test f(x, y, a) plus the Q[z] coordinate test")
    poly_flag(p, "-f")
    poly_flag(p, "--at", help="slice value a")
    return parser


def _diagnose(exc, stderr):
    flag = getattr(exc, "flag", None)
    where = f" in {flag}" if flag else ""
    stderr.write(f"parse error{where} at offset {exc.position}: {exc.message}\n")
    if exc.text is not None:
        stderr.write(f"  {exc.text}\n  {' ' * exc.position}^\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = _Out(stdout)
    try:
        args.func(args, out)
    except ParseError as exc:
        _diagnose(exc, stderr)
        return EXIT_USAGE
    except StepLimitExceeded as exc:
        stderr.write(f"step limit: {exc}\n")
        return EXIT_STEP_LIMIT
    except PreconditionError as exc:
        stderr.write(f"precondition violated ({type(exc).__name__}): {exc}\n")
        if exc.witness is not None:
            stderr.write(f"  witness: {print_canonical(exc.witness)}\n")
        return EXIT_PRECONDITION
    except (ArityError, ArityMismatch, ValueError, OSError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
