"""Command-line front end: ``qparikh <command> ...``.

Words are typed as plain strings: digits (and A-Z) are numeric letters,
a-z are the lowercase letters, ``""`` is the empty word.  ``--alphabet``
restricts the accepted characters.  Exit status is 0 on success, 1 for
domain errors (or a failed check) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import parikh as pk
from . import properties, series
from .morphism_reduction import canonical_reduction, sigma_z
from .polynomials import unitriangular_inverse
from .qbinomial import qbinom, qbinom_oracle
from .words import Word, parse_stream, parse_word

DEFAULT_ORDER = 64
DEFAULT_FIT_ORDER = 400


class _Usage(Exception):
    """Bad flag combination argparse cannot express; reported as a usage error."""


class _Fail(Exception):
    """A check ran but did not hold; printed output stands, exit status 1."""


def _word(args, text: str) -> Word:
    alphabet = parse_word(args.alphabet) if args.alphabet else None
    return parse_word(text, alphabet)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _residue_set(rs) -> str:
    return "{" + ", ".join(map(str, sorted(rs))) + "}"


# commands ---------------------------------------------------------------

def cmd_qbinom(args):
    u, v = _word(args, args.u), _word(args, args.v)
    p = qbinom_oracle(u, v) if args.oracle else qbinom(u, v)
    _emit(args, str(p), {"u": str(u), "v": str(v), "value": p.to_json(), "at_q1": p.at_one()})


def _matrix_payload(m):
    return {"n": m.n, "rows": m.to_json()}


def cmd_parikh(args):
    z, w = _word(args, args.z), _word(args, args.w)
    if args.inverse:
        m = pk.parikh_inverse(z, w)
    elif args.closed:
        m = pk.parikh_matrix_closed(z, w)
    else:
        m = pk.parikh_matrix(z, w)
    _emit(args, str(m), _matrix_payload(m))


def cmd_inverse(args):
    z, u = _word(args, args.z), _word(args, args.u)
    if args.method == "closed":
        m = pk.parikh_inverse_closed(z, u)
    elif args.method == "reversal":
        m = pk.parikh_inverse_reversal(z, u)
    elif args.method == "backsub":
        m = unitriangular_inverse(pk.parikh_matrix(z, u))
    else:
        m = pk.parikh_inverse(z, u)
    _emit(args, str(m), _matrix_payload(m))


def cmd_identity(args):
    u = _word(args, args.u)
    if args.identity in ("general", "duality"):
        if args.z is None:
            raise _Usage("--z is required for this identity")
        z = _word(args, args.z)
    if args.identity == "general":
        value = pk.cancellation_identity(z, u)
        ok = not value
        _emit(args, f"sum = {value}\n{'holds' if ok else 'FAILS'}", {"value": value.to_json(), "holds": ok})
    elif args.identity == "duality":
        ok = pk.reverse_duality_check(z, u)
        _emit(args, "holds" if ok else "FAILS", {"holds": ok})
    else:
        letters = [args.a, args.b] + ([args.c] if args.identity == "three-letter" else [])
        if any(x is None for x in letters):
            raise _Usage("--a, --b" + (" and --c" if args.identity == "three-letter" else "") + " are required")
        ls = [_word(args, x) for x in letters]
        if any(len(x) != 1 for x in ls):
            raise _Usage("--a/--b/--c must each be a single letter")
        ls = [x[0] for x in ls]
        if args.identity == "first":
            lhs, rhs = pk.first_relation(u, *ls)
        else:
            lhs, rhs = pk.three_letter_relation(u, *ls)
        ok = lhs == rhs
        _emit(
            args,
            f"lhs = {lhs}\nrhs = {rhs}\n{'holds' if ok else 'FAILS'}",
            {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "holds": ok},
        )
    if not ok:
        raise _Fail()


def cmd_cauchy(args):
    if args.kind == "minor":
        names = ("u", "v", "w", "x")
        fn = pk.cauchy_minor
    else:
        names = ("x", "y", "zz", "w")
        fn = pk.cauchy_dual
    words = [_word(args, getattr(args, n) or "") for n in names]
    value = fn(*words)
    _emit(args, str(value), {"value": value.to_json(), "nonnegative": value.is_nonnegative()})


def cmd_series(args):
    x = parse_stream(args.stream)
    z = _word(args, args.z)
    s = series.series_coefficients(x, z, args.order)
    if args.csv:
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(["n", "c_n"])
        out.writerows(enumerate(s.coeffs))
        return
    _emit(args, str(s), {"stream": str(x), "z": str(z), **s.to_json()})


def cmd_closed_form(args):
    u, z = _word(args, args.u), _word(args, args.z)
    cf = series.periodic_closed_form(u, z)
    lim = series.limit_rational(cf)
    num, den = lim.reduced_denominator()
    text = "\n".join([
        f"<({u})^n choose {z}> =",
        "  " + str(cf),
        f"limit * q^{cf.prefactor_exponent} = {lim}",
        f"                = ({num})/({den})",
    ])
    payload = cf.to_json() | {"limit": lim.to_json(), "limit_reduced": {"numerator": num.to_json(), "denominator": den.to_json()}}
    _emit(args, text, payload)


def cmd_recurrence(args):
    u, z = _word(args, args.u), _word(args, args.z)
    if args.at_q1:
        rec, terms = series.recurrence_integer(u, z)
        text = f"{str(rec).replace('c(', 'p(')}\nterms: {', '.join(map(str, terms))}"
        _emit(args, text, {"recurrence": rec.to_json(), "terms": terms})
        return
    cf = series.periodic_closed_form(u, z)
    if args.series:
        rec = series.coefficient_recurrence(cf)
        _emit(args, f"{rec}  (n >= {rec.start})", {"recurrence": rec.to_json()})
        return
    rec = series.recurrence_polynomial(cf)
    _emit(args, str(rec), {"recurrence": rec.to_json()})


def cmd_residues(args):
    u, z = _word(args, args.u), _word(args, args.z)
    rs = series.vanishing_residues(u, z)
    _emit(args, f"vanishing residues mod {len(u)}: {_residue_set(rs)}", {"modulus": len(u), "residues": sorted(rs)})


def cmd_growth_fit(args):
    u, z = _word(args, args.u), _word(args, args.z)
    if args.residue is not None:
        residues = [r % len(u) for r in args.residue]
    else:
        vanish = series.vanishing_residues(u, z)
        residues = [r for r in range(len(u)) if r not in vanish]
    fits = {r: series.growth_fit(u, z, r, args.order) for r in residues}
    text = "\n".join(f"residue {r} mod {len(u)}: exponent {e:.4f}" for r, e in fits.items())
    _emit(args, text, {"order": args.order, "fits": {str(r): e for r, e in fits.items()}})


def cmd_morphism(args):
    z = _word(args, args.z)
    if args.action == "sigma":
        sigma = sigma_z(z)
        _emit(args, str(sigma), {str(a): str(sigma.image(a)) for a in sorted(z.alphabet())})
        return
    if args.u is None:
        raise _Usage("morphism reduce needs <u>")
    u = _word(args, args.u)
    red = canonical_reduction(z, u)
    verdict = lambda ok: "holds" if ok else "FAILS"  # noqa: E731
    text = "\n".join([
        f"r = {red.r}",
        f"sigma_z = {red.sigma}",
        f"sigma_z(u) = {red.sigma(u)}",
        "Z =", str(red.Z),
        "C =", str(red.C),
        f"E_{len(z)}(sigma_z(u)) =", str(red.E),
        "P_z(u) =", str(red.P),
        f"direct identity: {verdict(red.direct_holds)}",
        f"inverse identity: {verdict(red.inverse_holds)}",
    ])
    payload = {
        "r": red.r, "sigma_image": str(red.sigma(u)),
        "Z": red.Z.to_json(), "C": red.C.to_json(), "E": red.E.to_json(), "P": red.P.to_json(),
        "direct_holds": red.direct_holds, "inverse_holds": red.inverse_holds,
    }
    _emit(args, text, payload)
    if not red.holds:
        raise _Fail()


def cmd_verify(args):
    results = properties.run_all(args.seed, args.only)
    failed = [n for n, f in results if f]
    if args.json:
        print(json.dumps({"seed": args.seed, "results": [{"name": n, "failure": f} for n, f in results]}))
    else:
        for name, failure in results:
            print(f"{'PASS' if failure is None else 'FAIL'}  {name}" + (f": {failure}" if failure else ""))
        print(f"{len(results) - len(failed)}/{len(results)} properties hold (seed {args.seed})")
    if failed:
        raise _Fail()


# parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--alphabet", help="accepted characters, e.g. 123 or ab")

    p = argparse.ArgumentParser(prog="qparikh", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("qbinom", cmd_qbinom, "q-binomial coefficient <u choose v>")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--oracle", action="store_true", help="sum over explicit occurrences instead of the DP")

    sp = add("parikh", cmd_parikh, "q-Parikh matrix P_z(w)")
    sp.add_argument("z")
    sp.add_argument("w")
    sp.add_argument("--closed", action="store_true", help="build entries from q-binomials directly")
    sp.add_argument("--inverse", action="store_true", help="print the inverse instead")

    sp = add("inverse", cmd_inverse, "inverse of P_z(u)")
    sp.add_argument("z")
    sp.add_argument("u")
    sp.add_argument("--method", choices=["auto", "closed", "reversal", "backsub"], default="auto")

    sp = add("identity-check", cmd_identity, "check an identity between q-binomials")
    sp.add_argument("identity", choices=["general", "duality", "first", "three-letter"])
    sp.add_argument("--u", required=True)
    sp.add_argument("--z")
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--c")

    sp = add("cauchy", cmd_cauchy, "Cauchy-type minor (u;v,w,x) or dual (x,y,z;w)")
    sp.add_argument("kind", choices=["minor", "dual"])
    for name in ("u", "v", "w", "x", "y"):
        sp.add_argument(f"--{name}")
    sp.add_argument("--z", dest="zz")

    sp = add("series", cmd_series, "coefficients of the limit series of <prefix choose z>")
    sp.add_argument("--stream", required=True, help="periodic:<u> or thue-morse")
    sp.add_argument("--z", required=True)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sp.add_argument("--csv", action="store_true", help="n,c_n table")

    sp = add("closed-form", cmd_closed_form, "closed form of n -> <u^n choose z> and its limit")
    sp.add_argument("u")
    sp.add_argument("z")

    sp = add("recurrence", cmd_recurrence, "linear recurrence for n -> <u^n choose z>")
    sp.add_argument("u")
    sp.add_argument("z")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--at-q1", action="store_true", help="integer recurrence at q = 1")
    mode.add_argument("--series", action="store_true", help="recurrence of the limit series coefficients")

    sp = add("residues", cmd_residues, "residue classes mod |u| where the limit series vanishes")
    sp.add_argument("u")
    sp.add_argument("z")

    sp = add("growth-fit", cmd_growth_fit, "log-log slope of coefficients on residue classes")
    sp.add_argument("u")
    sp.add_argument("z")
    sp.add_argument("--residue", type=int, action="append", help="repeatable; default all non-vanishing")
    sp.add_argument("--order", type=int, default=DEFAULT_FIT_ORDER)

    sp = add("morphism", cmd_morphism, "position morphism sigma_z and the canonical reduction")
    sp.add_argument("action", choices=["sigma", "reduce"])
    sp.add_argument("z")
    sp.add_argument("u", nargs="?")

    sp = add("verify", cmd_verify, "run the randomized property suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--only", action="append", choices=[pr.name for pr in properties.PROPERTIES])
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    if getattr(args, "order", 0) is not None and getattr(args, "order", 0) < 0:
        parser.error("argument --order: must be >= 0")
    try:
        args.fn(args)
    except _Usage as err:
        parser.error(str(err))
    except _Fail:
        return 1
    except ValueError as err:  # QParikhError and the plain argument checks of the library
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

