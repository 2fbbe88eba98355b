"""Command-line front end: compute, enumerate, prescribe, verify.

All input and output is JSON with exact scalars encoded as strings;
identical invocations produce byte-identical output.
"""

import argparse
import json
import sys

from .errors import (NotEnumerableError, PreconditionError,
                     UnsupportedInvolutionError)
from .geninv import (NAMED_INVERSES, enumerate_inverse_set, parse_equations)
from .ideals import LEFT, RIGHT, SidedIdeal, annihilator, principal
from .linalg import Subspace
from .prescribed import IdealConstraints, one_inverse_family, outer_with
from .rings import MatF, MatQ, MatrixRing, Zn, ring_from_name
from . import special
from . import oracle

EXIT_OK = 0
EXIT_NONE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_INVOLUTION = 65
EXIT_NOT_ENUMERABLE = 66


class UsageError(Exception):
    pass


def parse_ring(spec):
    """A ring from a shorthand (zn:6, m2f2, m2q) or a JSON object."""
    if isinstance(spec, str):
        text = spec.strip()
        if not text.startswith("{"):
            try:
                return ring_from_name(text)
            except ValueError as exc:
                raise UsageError(str(exc))
        spec = json.loads(text)
    kind = spec.get("kind")
    if kind == "zn":
        return Zn(int(spec["n"]))
    if kind == "matrix":
        k = int(spec["size"])
        scalars = spec.get("scalars", {})
        skind = scalars.get("kind")
        involution = spec.get("involution", "transpose")
        if involution != "transpose":
            raise UsageError("only the transpose involution is supported")
        if skind == "q":
            return MatQ(k)
        if skind in ("fp", "f", "gf"):
            return MatF(k, int(scalars["p"]))
    raise UsageError("unknown ring spec %r" % (spec,))


def parse_element(ring, text):
    try:
        obj = json.loads(text)
    except (TypeError, json.JSONDecodeError):
        obj = text
    try:
        return ring.parse(obj)
    except (TypeError, ValueError, KeyError) as exc:
        raise UsageError("bad element %r: %s" % (text, exc))


def _parse_ideal(ring, side, desc):
    if not isinstance(desc, dict) or len(desc) != 1:
        raise UsageError("ideal descriptor must have exactly one key, "
                         "got %r" % (desc,))
    key, val = next(iter(desc.items()))
    if key == "principal":
        return principal(ring.parse(val), side)
    if key == "annihilator":
        return annihilator(ring.parse(val), side)
    if key == "set":
        if not ring.finite:
            raise UsageError("extensional ideals need a finite ring")
        return SidedIdeal.from_elements(
            ring, side, [ring.parse(v) for v in val])
    if key in ("colspace", "rowspace", "span"):
        if not isinstance(ring, MatrixRing):
            raise UsageError("vector-span ideals need a matrix ring")
        field = ring.field
        vectors = [tuple(field.parse(x) for x in v) for v in val]
        return SidedIdeal.from_subspace(
            ring, side, Subspace.from_vectors(field, ring.k, vectors))
    raise UsageError("unknown ideal descriptor key %r" % key)


def parse_constraints(ring, text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("bad constraints JSON: %s" % exc)
    if not isinstance(obj, dict):
        raise UsageError("constraints must be a JSON object")
    slots = {"right_principal": RIGHT, "right_annihilator": RIGHT,
             "left_principal": LEFT, "left_annihilator": LEFT}
    kwargs = {}
    for slot, desc in obj.items():
        if slot not in slots:
            raise UsageError("unknown constraint slot %r (expected one of "
                             "%s)" % (slot, ", ".join(sorted(slots))))
        kwargs[slot] = _parse_ideal(ring, slots[slot], desc)
    if not kwargs:
        raise UsageError("constraints object is empty")
    return IdealConstraints(**kwargs)


def emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# -- subcommands -----------------------------------------------------------

def cmd_compute(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    name = args.inverse

    def weight(text, default):
        return default if text is None else parse_element(ring, text)

    one = ring.one
    if name in NAMED_INVERSES:
        rep = NAMED_INVERSES[name](a)
    elif name == "ef-mp":
        rep = special.weighted_mp(a, weight(args.e, one), weight(args.f, one))
    elif name == "e-core":
        rep = special.e_core(a, weight(args.e, one))
    elif name == "f-dual-core":
        rep = special.f_dual_core(a, weight(args.f, one))
    elif name == "w-core":
        rep = special.w_core(a, weight(args.w, one))
    elif name == "v-dual-core":
        rep = special.v_dual_core(a, weight(args.v, one))
    elif name == "right-w-core":
        rep = special.right_w_core(a, weight(args.w, one))
    elif name == "left-v-dual-core":
        rep = special.left_v_dual_core(a, weight(args.v, one))
    elif name == "bc":
        if args.b is None or args.c is None:
            raise UsageError("the bc inverse needs --b and --c")
        rep = special.bc_inverse(a, parse_element(ring, args.b),
                                 parse_element(ring, args.c),
                                 args.flavor or "full")
    elif name == "pq":
        if args.p is None or args.q is None:
            raise UsageError("the pq inverse needs --p and --q")
        rep = special.pq_inverse(a, parse_element(ring, args.p),
                                 parse_element(ring, args.q),
                                 args.flavor or "image_kernel")
    elif name == "bott-duffin":
        if args.p is None:
            raise UsageError("the Bott-Duffin inverse needs --p")
        q = None if args.q is None else parse_element(ring, args.q)
        rep = special.bott_duffin_inverse(a, parse_element(ring, args.p), q)
    else:
        raise UsageError(
            "unknown inverse %r (expected one of: %s)" % (
                name, ", ".join(sorted(
                    list(NAMED_INVERSES) + [
                        "ef-mp", "e-core", "f-dual-core", "w-core",
                        "v-dual-core", "right-w-core", "left-v-dual-core",
                        "bc", "pq", "bott-duffin"]))))
    out = rep.to_json()
    out["ring"] = ring.short_name
    emit(out)
    return EXIT_OK if rep.exists else EXIT_NONE


def cmd_enumerate(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    equations = parse_equations(args.equations)
    k = args.k
    members = enumerate_inverse_set(a, equations, k=k)
    out = {
        "ring": ring.short_name,
        "element": ring.to_json(a),
        "equations": list(equations),
        "count": len(members),
    }
    if not args.count_only:
        out["members"] = [ring.to_json(x) for x in members]
    emit(out)
    return EXIT_OK


def cmd_prescribe(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    cons = parse_constraints(ring, args.constraints)
    out = {"ring": ring.short_name, "element": ring.to_json(a),
           "mode": args.mode, "shape": list(cons.shape())}
    if args.mode == "one":
        fam = one_inverse_family(a, cons)
        if fam is None:
            out["exists"] = False
            out["reason"] = ("no {1}-inverse realizes the prescribed "
                             "ideals (direct-sum or regularity failure)")
            emit(out)
            return EXIT_NONE
        out["exists"] = True
        out["base"] = ring.to_json(fam.base)
        out["left_mult"] = ring.to_json(fam.left_mult)
        out["right_mult"] = ring.to_json(fam.right_mult)
        if ring.finite:
            members = fam.members()
            out["count"] = len(members)
            out["members"] = [ring.to_json(x) for x in members]
        emit(out)
        return EXIT_OK
    if args.mode not in ("outer", "reflexive"):
        raise UsageError("mode must be one, outer, or reflexive")
    rep = outer_with(a, cons, reflexive=(args.mode == "reflexive"))
    out.update(rep.to_json())
    emit(out)
    return EXIT_OK if rep.exists else EXIT_NONE


def cmd_verify(args):
    ring = parse_ring(args.ring)
    if args.theorems.strip() == "all":
        ids = [case.id for case in oracle.CATALOG]
    else:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
    try:
        reports = oracle.verify_all(ring, ids, max_cases=args.max_cases,
                                    max_seconds=args.max_seconds)
    except PreconditionError as exc:
        raise UsageError(str(exc))
    emit([rep.to_json() for rep in reports])
    if any(rep.counterexample is not None for rep in reports):
        return EXIT_COUNTEREXAMPLE
    if any(not rep.complete for rep in reports):
        return EXIT_BUDGET
    return EXIT_OK


# -- argument plumbing ------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringinv",
        description="Exact generalized inverses in Z_n and matrix rings.")
    parser.add_argument("--job", help="path to a JSON job spec, or - for "
                                      "stdin")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="compute a named inverse")
    p.add_argument("--ring", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--inverse", required=True)
    for flag in ("--e", "--f", "--w", "--v", "--b", "--c", "--p", "--q"):
        p.add_argument(flag)
    p.add_argument("--flavor")

    p = sub.add_parser("enumerate", help="enumerate a{i,j,...}")
    p.add_argument("--ring", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--equations", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("prescribe",
                       help="inverses with prescribed ideals")
    p.add_argument("--ring", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--constraints", required=True)
    p.add_argument("--mode", required=True,
                   choices=("one", "outer", "reflexive"))

    p = sub.add_parser("verify", help="run the verification catalog")
    p.add_argument("--ring", required=True)
    p.add_argument("--theorems", default="all")
    p.add_argument("--max-cases", type=int)
    p.add_argument("--max-seconds", type=float)
    return parser


_JOB_FLAGS = {
    "compute": ("ring", "element", "inverse", "e", "f", "w", "v", "b",
                "c", "p", "q", "flavor"),
    "enumerate": ("ring", "element", "equations", "k", "count_only"),
    "prescribe": ("ring", "element", "constraints", "mode"),
    "verify": ("ring", "theorems", "max_cases", "max_seconds"),
}


def _args_from_job(text):
    try:
        job = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("bad job JSON: %s" % exc)
    if not isinstance(job, dict) or "command" not in job:
        raise UsageError('a job needs a "command" key')
    command = job["command"]
    if command not in _JOB_FLAGS:
        raise UsageError("unknown command %r" % command)
    ns = argparse.Namespace(command=command, job=None)
    options = dict(job.get("options", {}))
    for key in ("ring", "element"):
        if key in job:
            options[key] = job[key]
    defaults = {"theorems": "all", "count_only": False}
    for flag in _JOB_FLAGS[command]:
        value = options.pop(flag, defaults.get(flag))
        if value is not None and not isinstance(value, (str, bool, int,
                                                        float)):
            value = json.dumps(value, sort_keys=True)
        setattr(ns, flag, value)
    if options:
        raise UsageError("unknown job options: %s"
                         % ", ".join(sorted(options)))
    for required in ("ring", "element"):
        if required in _JOB_FLAGS[command] and \
                getattr(ns, required) is None:
            raise UsageError("job is missing %r" % required)
    if command == "compute" and ns.inverse is None:
        raise UsageError("job is missing 'inverse'")
    if command == "enumerate" and ns.equations is None:
        raise UsageError("job is missing 'equations'")
    if command == "prescribe" and (ns.constraints is None
                                   or ns.mode is None):
        raise UsageError("job is missing 'constraints' or 'mode'")
    return ns


_DISPATCH = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "prescribe": cmd_prescribe,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.job is not None:
            text = sys.stdin.read() if args.job == "-" else \
                open(args.job).read()
            args = _args_from_job(text)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        sys.stderr.write("error: bad JSON: %s\n" % exc)
        return EXIT_USAGE
    except PreconditionError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except UnsupportedInvolutionError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INVOLUTION
    except NotEnumerableError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_NOT_ENUMERABLE


if __name__ == "__main__":
    sys.exit(main())
