"""Command-line front end.

Subcommands: ``factor`` runs the full pipeline, ``verify`` re-multiplies
a factorization against the input, ``charpoly`` prints the
characteristic polynomial of a chosen linear form, and ``dim`` prints
the quotient dimension.  Exit codes: 0 ok, 1 input error, 2 mathematical
rejection, 3 internal limit.
"""

import argparse
import json
import sys

from .driver import FactorOptions, charpoly_of_r, factor
from .errors import (ExtFactorError, InputError, LimitExceeded,
                     MathRejection, NotGroebner)
from .extfield import Extension, ExtPoly, natural_lift, sigma
from .parser import parse_expression, parse_problem
from .printing import (emit_result, extpoly_to_str, poly_to_str,
                       unipoly_to_str)
from .reduction import GroebnerBasis, build_quotient, is_groebner
from .unifactor import factor_poly


def _load(path, verify_gb=True):
    with open(path, "r", encoding="utf-8") as fh:
        spec = parse_problem(fh.read())
    gb = GroebnerBasis(spec.generators)
    if verify_gb:
        if not is_groebner(gb):
            raise NotGroebner(
                "the declared ideal generators are not a Groebner basis for "
                "the declared order; pass a Groebner basis (this tool never "
                "runs basis completion)")
        gb.verified = True
    ext = Extension(gb)
    f = sigma(spec.target, ext)
    return spec, ext, f


def _options(args, spec):
    seed = args.seed if args.seed is not None else (spec.seed or 0)
    forced = []
    r_text = getattr(args, "r", None)
    if r_text:
        forced.append(parse_expression(r_text, spec.ring_xy))
    elif spec.forced_r is not None:
        forced.append(spec.forced_r)
    return FactorOptions(
        seed=seed,
        max_random=args.max_random,
        prefer_minpoly=True if args.prefer_minpoly else None,
        forced_r=tuple(forced),
    )


def _cmd_factor(args):
    spec, ext, f = _load(args.file, verify_gb=not args.no_verify_gb)
    result = factor(f, ext, _options(args, spec))
    sys.stdout.write(emit_result(result, "json" if args.json else "human"))
    return 0


def _cmd_verify(args):
    spec, ext, f = _load(args.file, verify_gb=not args.no_verify_gb)
    if args.result:
        with open(args.result, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        constant = ext.element(parse_expression(doc["constant"], ext.ring))
        product = ExtPoly(ext, (constant,))
        for fac in doc["factors"]:
            poly = sigma(parse_expression(fac["poly"], spec.ring_xy), ext)
            product = product * poly ** int(fac["multiplicity"])
    else:
        result = factor(f, ext, _options(args, spec))
        product = result.reconstruct(ext)
    if product == f:
        print("ok: product reconstructs the input exactly")
        return 0
    print("MISMATCH: product differs from the input", file=sys.stderr)
    return 1


def _cmd_charpoly(args):
    spec, ext, f = _load(args.file, verify_gb=not args.no_verify_gb)
    r = parse_expression(args.r, spec.ring_xy)
    fm = f.monic()
    qp = build_quotient(ext.gb, natural_lift(fm))
    p_r, sqfree = charpoly_of_r(r, qp, prefer_minpoly=args.prefer_minpoly)
    print(f"dimension: {qp.dimension}")
    print(f"basis: {[poly_to_str(qp.ring.monomial(m)) for m in qp.staircase]}")
    print(f"charpoly: {unipoly_to_str(p_r)}")
    print(f"squarefree: {str(sqfree).lower()}")
    parts = factor_poly(p_r).factors
    print("factors over the ground field:")
    for q, mult in parts:
        suffix = f"  multiplicity {mult}" if mult > 1 else ""
        print(f"  {unipoly_to_str(q)}{suffix}")
    return 0


def _cmd_dim(args):
    spec, ext, f = _load(args.file, verify_gb=not args.no_verify_gb)
    fm = f.monic()
    qp = build_quotient(ext.gb, natural_lift(fm))
    print(qp.dimension)
    return 0


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="extfactor",
        description="Factor univariate polynomials over an algebraic "
                    "extension field presented by a Groebner basis.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_r=False):
        p.add_argument("file", help="problem file")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for all randomized choices (default 0)")
        p.add_argument("--no-verify-gb", action="store_true",
                       help="skip the S-polynomial check of the input basis")
        p.add_argument("--prefer-minpoly", action="store_true",
                       help="try the minimal polynomial before the "
                            "characteristic polynomial")
        p.add_argument("--max-random", type=int, default=12,
                       help="random draws of r before the deterministic grid")
        if with_r:
            p.add_argument("--r", default=None,
                           help="force the first linear form r")

    p = sub.add_parser("factor", help="factor the target polynomial")
    common(p, with_r=True)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("verify", help="re-multiply a factorization "
                                      "against the input")
    common(p, with_r=True)
    p.add_argument("--result", default=None,
                   help="JSON output of a previous 'factor --json' run; "
                        "without it the factorization is recomputed")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a "
                                        "chosen r")
    common(p)
    p.add_argument("--r", required=True, help="linear form, e.g. 'x1+2*x2+y'")
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("dim", help="dimension of the quotient ring")
    common(p)
    p.set_defaults(fn=_cmd_dim)
    return ap


def run(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MathRejection as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return 3
    except ExtFactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
