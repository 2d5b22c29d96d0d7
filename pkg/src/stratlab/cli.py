"""Command-line driver: ``stratlab <verb> [options]``.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed) and 2 on malformed input or arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .crystal import CrystalModule, isoclinic_check, newton_slopes, reduce_mod_p, verify_axioms
from .errors import ParseError, SchemaViolation, StratlabError, WrongSignature
from .finalseq import FinalSequence, final_sequence_from_permutation, generic_first_slope
from .io import fraction_to_str, load_module
from .modp import eo_class_from_eta, unitary_eta
from .polygons import admissible_polygons, format_slopes
from .strata import classify_32, supersingular_witness
from .weyl import CosetRep, Permutation, coset_rep, enumerate_W, eo_dimension, forget_unitary_32

NMAX_ENV = "STRATLAB_NMAX"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("[", "").replace("]", "").split(",") if x.strip())
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _signature(text: str) -> tuple[int, int]:
    sig = _ints(text)
    if len(sig) != 2:
        raise ParseError(f"signature must be 'a,b', got {text!r}")
    return sig


def _emit(args, text: str, data) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


# verbs ---------------------------------------------------------------------

def cmd_eo_list(args):
    a, b = _signature(args.signature)
    reps = enumerate_W(a, b)
    rows = []
    for r in reps:
        g = coset_rep(r)
        rows.append({"name": r.label, "u": list(r.u), "one_line": list(g.images),
                     "cycles": g.cycle_string(), "dimension": eo_dimension(r)})
    text = "\n".join(f"{x['name']}\t{x['cycles']}\tdim {x['dimension']}" for x in rows)
    _emit(args, text, rows)


def cmd_eo_dim(args):
    a, b = _signature(args.signature)
    r = CosetRep(a, b, _ints(args.u))
    _emit(args, str(eo_dimension(r)), {"name": r.label, "dimension": eo_dimension(r)})


def cmd_newton_list(args):
    a, b = _signature(args.signature)
    polys = admissible_polygons(a, b)
    _emit(args, "\n".join(format_slopes(P) for P in polys), [P.to_json() for P in polys])


def _omega(args) -> tuple[Permutation, int]:
    if args.gamma:
        return forget_unitary_32(CosetRep(3, 2, _ints(args.gamma))), 5
    if args.omega is None or args.q is None:
        raise ParseError("give --gamma, or --omega together with --q")
    return Permutation.from_cycles(args.omega, 2 * args.q), args.q


def cmd_final_seq(args):
    w, q = _omega(args)
    phi = final_sequence_from_permutation(w, q)
    _emit(args, str(phi), phi.values())


def cmd_generic_slope(args):
    if args.phi:
        phi = FinalSequence.from_values(_ints(args.phi))
    else:
        phi = final_sequence_from_permutation(*_omega(args))
    lam, D, C = generic_first_slope(phi, with_sets=True)
    if args.show_sets:
        text = f"{fraction_to_str(lam)}\nD = {sorted(D)}\nC = {sorted(C)}"
    else:
        text = fraction_to_str(lam)
    _emit(args, text, {"phi": phi.values(), "D": sorted(D), "C": sorted(C), "slope": fraction_to_str(lam)})


def _crystal(args) -> CrystalModule:
    m = load_module(args.file, check=False)
    if not isinstance(m, CrystalModule):
        raise SchemaViolation("$.kind", f"{args.verb} needs a crystal module file")
    return m


def cmd_module_verify(args):
    m = load_module(args.file, check=False)
    if isinstance(m, CrystalModule):
        report = verify_axioms(m)
        _emit(args, str(report), [
            {"condition": c.number, "name": c.name, "passed": c.passed, "detail": c.detail,
             "counterexample": list(c.counterexample)} for c in report.checks])
        return 0 if report.passed else 1
    from .modp import invariant_failures

    failures = invariant_failures(m)
    text = "all mod-p invariants hold" if not failures else "\n".join(f"{k}: FAIL - {msg}" for k, msg in failures)
    _emit(args, text, [{"check": k, "message": msg} for k, msg in failures])
    return 0 if not failures else 1


def cmd_module_slopes(args):
    m = _crystal(args)
    n_max = args.n_max
    if n_max is None and os.environ.get(NMAX_ENV):
        try:
            n_max = int(os.environ[NMAX_ENV])
        except ValueError:
            raise ParseError(f"{NMAX_ENV} must be an integer") from None
    iso = isoclinic_check(m, n_max)
    slopes = newton_slopes(m)
    lines = []
    if iso is None:
        lines.append("isoclinic: not detected within the search bound")
    else:
        lines.append(f"isoclinic: F^{iso.N} = p^{iso.s} U, slope {fraction_to_str(iso.slope)}")
    lines.append(f"char-poly slopes: {slopes}")
    _emit(args, "\n".join(lines), {
        "isoclinic": None if iso is None else {"N": iso.N, "s": iso.s, "slope": fraction_to_str(iso.slope)},
        "slopes": [[fraction_to_str(s), h] for s, h in slopes.parts],
    })


def cmd_module_class(args):
    m = load_module(args.file)
    signature = m.signature
    if args.signature:
        signature = _signature(args.signature)
    if signature is None:
        raise ParseError("module has no signature; pass --signature a,b")
    red = reduce_mod_p(m) if isinstance(m, CrystalModule) else m
    eta = unitary_eta(red)
    cls = eo_class_from_eta(eta, *signature)
    g = coset_rep(cls)
    _emit(args, f"eta_1 = {list(eta.values)}\n{cls.label} = {g.cycle_string()}",
          {"eta": list(eta.values), "u": list(cls.u), "gamma": g.cycle_string()})


def cmd_witness(args):
    report = supersingular_witness(args.p)
    N, s = report.isoclinic
    _emit(args, str(report), {
        "p": report.p, "axioms": report.axioms_passed, "isoclinic": {"N": N, "s": s},
        "slope": fraction_to_str(report.slope), "eta": list(report.eta),
        "eo_class": list(report.eo_class.u), "certified": report.certified,
    })


def cmd_classify(args):
    if _signature(args.signature) != (3, 2):
        raise WrongSignature(f"classification is implemented for signature 3,2 only, got {args.signature}")
    table = classify_32(args.p)
    out = {"md": table.to_markdown, "csv": table.to_csv, "json": table.to_json}[args.format]()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, fmt=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if fmt:
            p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    p = verb("eo-list", cmd_eo_list, "list the EO strata gamma_u of a signature")
    p.add_argument("--signature", default="3,2")
    p = verb("eo-dim", cmd_eo_dim, "dimension of one EO stratum")
    p.add_argument("--signature", default="3,2")
    p.add_argument("--u", required=True, help="indices u_1,...,u_b")
    p = verb("newton-list", cmd_newton_list, "admissible Newton polygons")
    p.add_argument("--signature", default="3,2")
    for name, func, help in (("final-seq", cmd_final_seq, "final sequence of an element of W_q"),
                             ("generic-slope", cmd_generic_slope, "generic first slope of a final sequence")):
        p = verb(name, func, help)
        p.add_argument("--omega", help='cycle string, e.g. "(3,6,4)(5,7,8)"')
        p.add_argument("--q", type=int)
        p.add_argument("--gamma", help="u,v for a tabulated gamma_{u,v} of signature (3,2)")
        if name == "generic-slope":
            p.add_argument("--phi", help="final sequence [phi(1),...,phi(2q)]")
            p.add_argument("--show-sets", action="store_true")
    p = verb("module-verify", cmd_module_verify, "check the module axioms of a JSON file")
    p.add_argument("file")
    p = verb("module-slopes", cmd_module_slopes, "isocrystal slopes of a crystal module file")
    p.add_argument("file")
    p.add_argument("--n-max", type=int, default=None)
    p = verb("module-class", cmd_module_class, "EO class of a module via its eta vector")
    p.add_argument("file")
    p.add_argument("--signature")
    p = verb("witness", cmd_witness, "certify the supersingular point on gamma_{3,4}")
    p.add_argument("--p", type=int, default=3)
    p = verb("classify", cmd_classify, "EO x Newton interaction table", fmt=False)
    p.add_argument("--signature", default="3,2")
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--p", type=int, default=3, help="prime used for the witness rule")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (ParseError, SchemaViolation) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except StratlabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
