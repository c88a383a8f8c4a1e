"""Command line interface.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on
errors (bad input, unsupported field, exhausted budgets).
"""

import argparse
import logging
import sys

from hopfbench import catalog, config, harness
from hopfbench.errors import HopfbenchError
from hopfbench.freealg import format_poly, parse_poly
from hopfbench.gf import make_field, parse_field
from hopfbench.hopf import (
    CollapseReport,
    HopfPresentation,
    build_hopf,
    check_axioms,
    grouplikes,
    iso_search,
    skew_primitive_space,
)
from hopfbench.nichols import make_braided, nichols_dims
from hopfbench.rewrite import CompletionStatus, RewriteSystem, complete, enumerate_basis

logger = logging.getLogger(__name__)


def _system(P):
    system, status = complete(RewriteSystem.from_relations(P.alphabet, P.field, P.relations))
    if status is not CompletionStatus.CONFLUENT:
        raise HopfbenchError("completion exceeded its cap")
    return system


def _build(path):
    P = HopfPresentation.load(path)
    result = build_hopf(P)
    if isinstance(result, CollapseReport):
        print(f"collapse: {result.kind.value}: {result.reason}")
        return None
    return result


def cmd_field_info(args):
    F = make_field(args.p, args.k)
    print(f"{F.name}: p={F.p} k={F.k} q={F.q} modulus={list(F.modulus)}")
    if F.q <= 16:
        elems = list(F.elements())
        print("mul:")
        for a in elems:
            print("  " + " ".join(str(F.mul(a, b)) for b in elems))
    return 0


def cmd_nf(args):
    P = HopfPresentation.load(args.presentation)
    system = _system(P)
    print(format_poly(system.normal_form(parse_poly(args.poly, P.alphabet, P.field)), P.alphabet))
    return 0


def cmd_dim(args):
    P = HopfPresentation.load(args.presentation)
    try:
        system = _system(P)
    except HopfbenchError as e:
        print(f"collapse: {e}")
        return 1
    words, finite = enumerate_basis(system)
    if not finite:
        print(f"dimension >= {len(words)} (basis did not close)")
        return 1
    print(f"dimension {len(words)}")
    if args.basis:
        print(" ".join(P.alphabet.format_word(w) for w in words))
    return 0


def cmd_hopf_check(args):
    H = _build(args.presentation)
    if H is None:
        return 1
    report = check_axioms(H)
    print(f"dimension {H.dim}")
    for r in report.results:
        line = f"{r.name}: {'pass' if r.passed else 'fail'}"
        if r.scope != "basis":
            line += f" (checked on {r.scope})"
        print(line + (f" at {r.witness}" if r.witness else ""))
    return 0 if report.passed else 1


def cmd_skewprim(args):
    H = _build(args.presentation)
    if H is None:
        return 1
    A = H.algebra
    rows = skew_primitive_space(H, A.element(args.g), A.element(args.h))
    print(f"dim P_{{{args.g},{args.h}}} = {rows.shape[0]}")
    for row in rows:
        print("  " + A.format_vector(row))
    return 0


def cmd_grouplikes(args):
    H = _build(args.presentation)
    if H is None:
        return 1
    found = grouplikes(H, "enumerate" if args.enumerate else "verify")
    print(f"{len(found)} group-like elements")
    for v in found:
        print("  " + H.algebra.format_vector(v))
    return 0


def cmd_nichols(args):
    F = parse_field(args.field)
    dims = nichols_dims(make_braided(args.braiding, F), n_max=args.nmax)
    print(f"{args.braiding} over {F.name}: {dims.describe()}")
    return 0


def cmd_catalog(args):
    if args.action == "list":
        families = catalog.list_families(args.scope)
        for spec in families:
            params = ",".join(spec.param_names) or "-"
            print(f"{spec.id:<12} {spec.group:<12} params={params} {spec.label}")
        counts = {}
        for spec in families:
            counts[spec.source] = counts.get(spec.source, 0) + 1
        print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        return 0
    if args.action == "show":
        if not args.id:
            raise HopfbenchError("catalog show needs a family id")
        print(catalog.to_text(catalog.get_family(args.id)))
        return 0
    for spec in catalog.list_families(args.scope):
        print(catalog.to_text(spec))
        print()
    return 0


def _sampling(args):
    if args.sample:
        return harness.Sampling.sample(args.sample, args.seed)
    return None


def cmd_verify(args):
    F = parse_field(args.field)
    if args.scope in catalog.SCOPES:
        reports = harness.verify_scope(args.scope, F, _sampling(args), args.workers)
    else:
        reports = harness.verify_family(args.scope, F, _sampling(args), args.workers)
    for r in reports:
        print(r.to_record())
    print(harness.summarize(reports).to_string())
    return 0 if all(r.passed for r in reports) else 1


def cmd_iso(args):
    H1, H2 = _build(args.first), _build(args.second)
    if H1 is None or H2 is None:
        return 1
    found = iso_search(H1, H2, limit=1)
    if not found:
        print("not isomorphic")
        return 1
    print("isomorphic")
    for name, v in found[0].images.items():
        print(f"  {name} -> {H2.algebra.format_vector(v)}")
    return 0


def cmd_iso_criteria(args):
    report = harness.verify_iso_criteria(args.id, parse_field(args.field))
    for line in report.to_records():
        print(line)
    print("classes: " + " | ".join(" ".join(c) for c in report.classes()))
    print(f"agreement={report.agreement}")
    return 0 if report.agreement else 1


def cmd_ambiguity(args):
    report = harness.verify_ambiguity_condition(args.id, parse_field(args.field), _sampling(args))
    for line in report.to_records():
        print(line)
    print(f"agreement={report.agreement} discrepancies={len(report.discrepancies)}")
    return 0 if report.agreement else 1


def cmd_identities(args):
    report = harness.verify_identity_suite(args.suite, parse_field(args.field), args.trials, args.seed)
    for line in report.to_records():
        print(line)
    return 0 if report.passed else 1


def cmd_nichols_suite(args):
    report = harness.verify_nichols_suite(parse_field(args.field))
    for line in report.to_records():
        print(line)
    return 0 if report.passed else 1


def cmd_controls(args):
    reports = harness.negative_controls(parse_field(args.field), args.families or None)
    for r in reports:
        print(r.to_record())
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="hopfbench", description="Exact workbench for small pointed Hopf algebras.")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    ap.add_argument("--quiet", action="store_true", help="disable progress bars")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe GF(p^k)")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("nf", help="normal form of a polynomial modulo a presentation")
    p.add_argument("presentation")
    p.add_argument("poly")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("dim", help="dimension of the quotient algebra")
    p.add_argument("presentation")
    p.add_argument("--basis", action="store_true", help="print the basis words")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("hopf-check", help="build the Hopf algebra and check its axioms")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_hopf_check)

    p = sub.add_parser("skewprim", help="space of (g, h)-skew primitives")
    p.add_argument("presentation")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(func=cmd_skewprim)

    p = sub.add_parser("grouplikes", help="group-like elements")
    p.add_argument("presentation")
    p.add_argument("--enumerate", action="store_true", help="scan the whole space instead of the generated group")
    p.set_defaults(func=cmd_grouplikes)

    p = sub.add_parser("nichols", help="graded dimensions of a Nichols algebra")
    p.add_argument("braiding", help="e.g. jordan:1,2 or yd-cyclic:1,2,3")
    p.add_argument("--field", default="2")
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_nichols)

    p = sub.add_parser("catalog", help="list, show or dump catalog families")
    p.add_argument("action", choices=("list", "show", "dump"))
    p.add_argument("id", nargs="?")
    p.add_argument("--scope", default="all", choices=catalog.SCOPES)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="verify a scope (T3.7, T4.2, lemmas, all) or one family")
    p.add_argument("scope")
    p.add_argument("--field", default="2")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="search for a Hopf isomorphism between two presentations")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("iso-criteria", help="compare a family's isomorphism criterion with the search")
    p.add_argument("id")
    p.add_argument("--field", default="2")
    p.set_defaults(func=cmd_iso_criteria)

    p = sub.add_parser("ambiguity", help="check a resolvability condition against completion")
    p.add_argument("id")
    p.add_argument("--field", default="2")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_ambiguity)

    p = sub.add_parser("identities", help="run an identity suite (jacobson, lemma210, lemma211)")
    p.add_argument("suite", choices=tuple(harness.IDENTITY_SUITES))
    p.add_argument("--field", default="2")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("nichols-suite", help="fixed Nichols dimension targets")
    p.add_argument("--field", default="2")
    p.set_defaults(func=cmd_nichols_suite)

    p = sub.add_parser("controls", help="fault-injected negative controls")
    p.add_argument("families", nargs="*")
    p.add_argument("--field", default="2")
    p.set_defaults(func=cmd_controls)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = config.LOG_LEVEL
    if args.verbose == 1:
        level = "INFO"
    elif args.verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    if args.quiet:
        config.PROGRESS = False
    try:
        return args.func(args)
    except HopfbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
