"""Command-line surface: ``polydec <subcommand> ...``.

Exit codes: 0 for success/found, 1 for a clean "no decomposition" (or
negative verdict), 2 for usage or input errors.  Output is line-oriented;
``--json`` switches decomposition-shaped results to the JSON schema
``{"target", "field", "factors", "complete"}``.  Identical argv and seed
give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import addecomp, additive, gendecomp, ratfun, upoly
from .additive import AdditivePoly
from .addecomp import OrderedFactorisation
from .errors import NotAdditive, ParseError, PolydecError
from .field import parse_field_spec
from .gendecomp import Strategy
from .upoly import Poly


def _field_of(args):
    if not getattr(args, "field", None):
        raise ParseError("--field is required for this subcommand")
    return parse_field_spec(args.field, seed=getattr(args, "seed", 0))


def _poly(args, field, text):
    f = Poly.parse(field, text)
    if getattr(args, "assert_additive", False):
        AdditivePoly.from_poly(f)
    return f


def _additive(field, text):
    return AdditivePoly.parse(field, text)


def _shape(args):
    if not getattr(args, "shape", None):
        raise ParseError("--shape is required for this subcommand")
    return OrderedFactorisation.parse(args.shape)


def _emit_decs(args, decs, empty_message="no decomposition"):
    if not decs:
        print(empty_message)
        return 1
    if getattr(args, "json", False):
        payload = [d.to_json_dict() for d in decs]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
    else:
        for d in decs:
            print(d)
    return 0


def _cmd_compose(args):
    field = _field_of(args)
    polys = [_poly(args, field, t) for t in args.exprs]
    acc = polys[0]
    for f in polys[1:]:
        acc = upoly.compose(acc, f)
    print(acc)
    return 0


def _monicized(f):
    """Scale to monic, reporting the adjustment (f = c * (monic f))."""
    if f.is_monic() or f.is_zero():
        return f
    c = f.lc()
    print(f"note: input scaled by {c.inv()} to make it monic (f = {c} * target)")
    return f.monic()


def _cmd_decompose(args):
    field = _field_of(args)
    shape = _shape(args)
    strategy = Strategy(args.strategy)
    f = _monicized(_poly(args, field, args.expr))
    decs = gendecomp.ord_fact_decomp(f, shape, strategy, args.seed)
    if args.limit is not None:
        decs = decs[: args.limit]
    return _emit_decs(args, decs)


def _cmd_complete(args):
    field = _field_of(args)
    f = _monicized(_poly(args, field, args.expr))
    dec = gendecomp.first_complete(f, Strategy(args.strategy), args.seed)
    return _emit_decs(args, [dec])


def _cmd_all_complete(args):
    field = _field_of(args)
    f = _additive(field, args.expr)
    decs = addecomp.all_complete_decompositions(f, limit=args.limit, seed=args.seed)
    return _emit_decs(args, decs)


def _cmd_meet(args):
    field = _field_of(args)
    f = _additive(field, args.exprs[0])
    g = _additive(field, args.exprs[1])
    print(additive.meet(f, g))
    return 0


def _cmd_join(args):
    field = _field_of(args)
    f = _additive(field, args.exprs[0])
    g = _additive(field, args.exprs[1])
    print(additive.join(f, g))
    return 0


def _cmd_transform(args):
    field = _field_of(args)
    g = _additive(field, args.exprs[0])
    f = _additive(field, args.exprs[1])
    print(additive.transform(g, f))
    return 0


def _cmd_similar(args):
    field = _field_of(args)
    f = _additive(field, args.exprs[0])
    g = _additive(field, args.exprs[1])
    flag, witness = additive.is_similar(f, g)
    if flag:
        print(f"true witness={witness}")
        return 0
    print("false")
    return 1


def _cmd_transmute(args):
    field = _field_of(args)
    f = _additive(field, args.exprs[0])
    g = _additive(field, args.exprs[1])
    pairs = additive.transmutable(f, g, args.seed)
    if not pairs:
        print("no transmutation")
        return 1
    for gbar, fbar in pairs:
        print(f"({gbar}) o ({fbar})")
    return 0


def _cmd_minaddmult(args):
    field = _field_of(args)
    f = Poly.parse(field, args.expr)
    print(additive.min_add_mult(f))
    return 0


def _cmd_basis(args):
    field = _field_of(args)
    f = _additive(field, args.expr)
    basis = addecomp.indec_basis(f, args.seed)
    if basis is None:
        print("not completely reducible")
        return 1
    for part in basis:
        print(part)
    return 0


def _cmd_counts(args):
    s, t, flags = additive.counts(args.p, args.nu, args.sigma)
    print(f"S={s} T={t} F={flags}")
    return 0


def _cmd_chebyshev(args):
    field = _field_of(args)
    print(upoly.chebyshev(args.index, field))
    return 0


def _cmd_absdec(args):
    field = _field_of(args)
    f = _additive(field, args.expr)
    tower, dec = addecomp.abs_decompose(f, args.seed)
    if args.json:
        print(json.dumps(dec.to_json_dict(), sort_keys=True))
    else:
        print(f"field: {tower.describe()}")
        print(dec)
    return 0


def _cmd_ratdec(args):
    field = _field_of(args)
    quad = [int(v) for v in args.shape.split(",")]
    if len(quad) != 4:
        raise ParseError("ratdec shape must be rN,rD,sN,sD")
    f = ratfun.parse_rational(field, args.expr)
    pairs = ratfun.general_rat_dec(f, quad, args.seed)
    if not pairs:
        print("no decomposition")
        return 1
    for g, h in pairs:
        print(f"({g}) o ({h})")
    return 0


def _cmd_selftest(args):
    from .selftest import run_selftest

    return run_selftest(verbose=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polydec",
        description="Exact functional decomposition of polynomials over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=False, strategy=False, limit=False, nexprs=0, expr=False):
        p.add_argument("--field", help="field spec, e.g. GF(5) or GF(2)[g1]/(g1^2+g1+1)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")
        p.add_argument("--assert-additive", action="store_true", dest="assert_additive")
        if shape:
            p.add_argument("--shape", help="comma-separated degrees, outermost first")
        if strategy:
            p.add_argument(
                "--strategy",
                choices=[s.value for s in Strategy],
                default=Strategy.SEPARATED.value,
            )
        if limit:
            p.add_argument("--limit", type=int, default=None)
        if expr:
            p.add_argument("expr")
        if nexprs:
            p.add_argument("exprs", nargs=nexprs)

    p = sub.add_parser("compose", help="compose polynomials, outermost first")
    common(p)
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("decompose", help="all decompositions matching a shape")
    common(p, shape=True, strategy=True, limit=True, expr=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("complete", help="first complete decomposition")
    common(p, strategy=True, expr=True)
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("all-complete", help="all complete decompositions (additive)")
    common(p, limit=True, expr=True)
    p.set_defaults(func=_cmd_all_complete)

    for name, fn, help_text in [
        ("meet", _cmd_meet, "greatest common right composition factor"),
        ("join", _cmd_join, "least common left composition multiple"),
        ("transform", _cmd_transform, "transformation of the second input by the first"),
        ("similar", _cmd_similar, "similarity test with witness"),
        ("transmute", _cmd_transmute, "all transmutations of f by g"),
    ]:
        p = sub.add_parser(name, help=help_text)
        common(p, nexprs=2)
        p.set_defaults(func=fn)

    p = sub.add_parser("minaddmult", help="minimal additive multiple")
    common(p, expr=True)
    p.set_defaults(func=_cmd_minaddmult)

    p = sub.add_parser("basis", help="indecomposable basis (completely reducible)")
    common(p, expr=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("counts", help="subspace/extension/flag counts")
    p.add_argument("p", type=int)
    p.add_argument("nu", type=int)
    p.add_argument("sigma", type=int)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("chebyshev", help="Chebyshev polynomial over the field")
    common(p)
    p.add_argument("index", type=int)
    p.set_defaults(func=_cmd_chebyshev)

    p = sub.add_parser("absdec", help="absolute decomposition over a tower")
    common(p, expr=True)
    p.set_defaults(func=_cmd_absdec)

    p = sub.add_parser("ratdec", help="rational function decomposition")
    common(p, shape=True, expr=True)
    p.set_defaults(func=_cmd_ratdec)

    p = sub.add_parser("selftest", help="replay the bundled worked-example corpus")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except NotAdditive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolydecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
