"""Command line front end.

Every subcommand reads polynomials as positional expressions (or from
``--file``, a document in the same schema the tool writes) and prints either
a short human summary or, with ``--json``, one JSON document. Exit status is
0 on success, 1 when a mathematical precondition fails, 2 on usage errors.
"""

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .deform import (ApproxSeq, construct, shear, shear_mubasis, transport,
                     verify_approx)
from .errors import MuClassError, UsageError
from .explore import census, sample_triple, sample_with_class, specialization_probe
from .fields import RatFunc
from .parser import parse_field, parse_poly
from .poly import Poly, RootPolicy
from .syzygy import (ParamTriple, SyzygyVec, decompose, mu, mu_basis,
                     verify_identity)

COMMANDS = ("mu", "mubasis", "decompose", "shear", "approx", "verify",
            "transport", "sample", "census", "probe")


def poly_to_json(f):
    return [f.ctx.to_json(c) for c in f.coeffs]


def syzygy_to_json(s):
    return [poly_to_json(f) for f in s.coords]


def family_to_json(seq, f):
    """``eps``-expansion of a family member: one coefficient array per power."""
    return [poly_to_json(part) for part in seq.eps_parts(f)]


def report_to_json(report):
    out = {
        "passed": report.passed,
        "mu_origin": report.mu_origin,
        "mu_eps": report.mu_eps,
        "target_mu": report.target_mu,
        "theorem_applies": report.theorem_applies,
        "permutation": list(report.permutation),
        "checks": {k: {"passed": c.passed, "detail": c.detail} for k, c in report.checks.items()},
    }
    if report.witness is not None:
        out["witness"] = [[f.ctx.to_json(c) for c in f.coeffs] for f in report.witness]
    return out


def _poly_from_json(coeffs, ctx):
    return Poly(ctx, [_coeff_from_json(c, ctx) for c in coeffs])


def _coeff_from_json(c, ctx):
    if isinstance(c, list):
        return ctx.convert(tuple(_coeff_from_json(v, ctx.base) for v in c))
    if isinstance(c, str):
        return ctx.convert(_fraction(c))
    return ctx.convert(c)


def _fraction(s):
    return Fraction(s.strip())


def _load_file(path):
    with open(path) as fh:
        return json.load(fh)


def _field_from(args, doc):
    spec = args.field
    if doc is not None and spec is None:
        spec = doc.get("field")
    return parse_field(spec or "q")


def _read_polys(args, ctx, count, doc, key="polys"):
    if doc is not None:
        raw = doc.get("inputs", {}).get(key)
        if raw is None and key == "family":
            raw = doc.get("outputs", {}).get("family")
        if raw is None:
            raise UsageError(f"--file document has no inputs.{key}")
        if key == "family":
            R = RatFunc(ctx)
            polys = []
            if isinstance(raw, dict):
                raw = [raw[k] for k in "abc"]
            for parts in raw:
                f = Poly.zero(R)
                eps = Poly.const(R, R.one)
                for part in parts:
                    f = f + _poly_from_json(part, ctx).embed(R) * eps
                    eps = eps * Poly.const(R, R.gen)
                polys.append(f)
        else:
            polys = [_poly_from_json(p, ctx) for p in raw]
    else:
        target = RatFunc(ctx) if key == "family" else ctx
        polys = [parse_poly(text, target) for text in args.polys]
    if len(polys) != count:
        raise UsageError(f"expected {count} polynomials, got {len(polys)}")
    return polys


def _policy(args):
    candidates = None
    if args.candidates:
        candidates = [_fraction(c.strip()) for c in args.candidates.split(",") if c.strip()]
    return RootPolicy(allow_extension=args.allow_extension, candidates=candidates,
                      budget=args.budget, seed=args.seed)


def _triple(args, ctx, doc):
    return ParamTriple(*_read_polys(args, ctx, 3, doc))


def _family(args, ctx, doc):
    a, b, c = _read_polys(args, ctx, 3, doc, key="family")
    R = a.ctx
    zero = R.base.zero
    origin = ParamTriple(*(Poly.from_payloads(ctx, [R.specialize(x, zero) for x in f.coeffs])
                           for f in (a, b, c)))
    return ApproxSeq(a, b, c, origin, mu(origin) + 1)


def _inputs_json(polys):
    return {"polys": [poly_to_json(f) for f in polys]}


def cmd_mu(args, ctx, doc):
    triple = _triple(args, ctx, doc)
    m = mu(triple)
    s = mu_basis(triple).p
    return ({"inputs": _inputs_json(triple), "outputs": {"mu": m, "syzygy": syzygy_to_json(s)}},
            f"mu = {m}\nsyzygy = {s}")


def cmd_mubasis(args, ctx, doc):
    triple = _triple(args, ctx, doc)
    basis = mu_basis(triple)
    checks = verify_identity(basis)
    return ({"inputs": _inputs_json(triple),
             "outputs": {"mu": basis.mu, "n": basis.n, "p": syzygy_to_json(basis.p),
                         "q": syzygy_to_json(basis.q), "checks": checks}},
            f"mu = {basis.mu}, n = {basis.n}\np = {basis.p}\nq = {basis.q}\n"
            f"identity: {'ok' if all(checks.values()) else checks}")


def cmd_decompose(args, ctx, doc):
    polys = _read_polys(args, ctx, 6, doc)
    triple = ParamTriple(*polys[:3])
    s = SyzygyVec(*polys[3:])
    basis = mu_basis(triple)
    h1, h2 = decompose(basis, s)
    return ({"inputs": _inputs_json(polys),
             "outputs": {"p": syzygy_to_json(basis.p), "q": syzygy_to_json(basis.q),
                         "h1": poly_to_json(h1), "h2": poly_to_json(h2)}},
            f"p = {basis.p}\nq = {basis.q}\nh1 = {h1}\nh2 = {h2}")


def _lam(args, ctx):
    if args.lam is None:
        raise UsageError("--lam is required")
    return ctx.convert(_fraction(args.lam))


def cmd_shear(args, ctx, doc):
    triple = _triple(args, ctx, doc)
    lam = _lam(args, ctx)
    sheared = shear(triple, lam)
    basis = shear_mubasis(mu_basis(triple), lam)
    checks = verify_identity(basis, sheared)
    return ({"inputs": _inputs_json(triple), "lambda": ctx.to_json(lam),
             "outputs": {"triple": [poly_to_json(f) for f in sheared], "mu": mu(sheared),
                         "p": syzygy_to_json(basis.p), "q": syzygy_to_json(basis.q),
                         "checks": checks}},
            f"sheared = {sheared}\np = {basis.p}\nq = {basis.q}\n"
            f"identity: {'ok' if all(checks.values()) else checks}")


def _family_json(seq):
    return {name: family_to_json(seq, f) for name, f in zip("abc", seq.polys)}


def _family_text(seq):
    lines = []
    for name, f in zip("abc", seq.polys):
        parts = seq.eps_parts(f)
        text = " + ".join(f"eps^{k}*({p})" if k else f"({p})" for k, p in enumerate(parts) if p)
        lines.append(f"{name}_eps = {text or '0'}")
    return "\n".join(lines)


def _report_text(report):
    lines = [f"class over K(eps) = {report.mu_eps} (target {report.target_mu})"]
    for k, c in report.checks.items():
        mark = {True: "PASS", False: "FAIL", None: "----"}[c.passed]
        lines.append(f"  [{mark}] {k}: {c.detail}")
    return "\n".join(lines)


def cmd_approx(args, ctx, doc):
    triple = _triple(args, ctx, doc)
    seq, report = construct(triple, _policy(args), seed=args.seed)
    pick = seq.pick
    L = pick.ctx
    out = {"lambda": L.to_json(pick.lam), "alpha": L.to_json(pick.alpha.value),
           "alpha_field": L.descriptor(), "path": pick.path, "family": _family_json(seq),
           "pre_shear": None if seq.pre_shear is None else ctx.to_json(seq.pre_shear)}
    pre = "" if seq.pre_shear is None else f"pre-shear a -> a + ({ctx.format(seq.pre_shear)}) c\n"
    text = (f"{pre}lambda = {L.format(pick.lam)}, alpha = {L.format(pick.alpha.value)}\n"
            f"{_family_text(seq)}\n{_report_text(report)}")
    status = 0 if report.passed else 1
    return ({"inputs": _inputs_json(triple), "outputs": out, "report": report_to_json(report)},
            text, status)


def cmd_verify(args, ctx, doc):
    seq = _family(args, ctx, doc)
    report = verify_approx(seq, seed=args.seed)
    return ({"inputs": {"family": _family_json(seq)}, "report": report_to_json(report)},
            _report_text(report), 0 if report.passed else 1)


def cmd_transport(args, ctx, doc):
    seq = _family(args, ctx, doc)
    lam = _lam(args, ctx)
    moved = transport(seq, lam)
    report = verify_approx(moved, seed=args.seed)
    return ({"inputs": {"family": _family_json(seq)}, "lambda": ctx.to_json(lam),
             "outputs": {"family": _family_json(moved)}, "report": report_to_json(report)},
            f"{_family_text(moved)}\n{_report_text(report)}", 0 if report.passed else 1)


def cmd_sample(args, ctx, doc):
    rng = random.Random(args.seed)
    if args.n is None:
        raise UsageError("--n is required")
    if args.mu is None:
        triple = sample_triple(args.n, ctx, rng)
        out = {"triple": [poly_to_json(f) for f in triple], "mu": mu(triple)}
    else:
        triple, basis = sample_with_class(args.n, args.mu, ctx, rng)
        out = {"triple": [poly_to_json(f) for f in triple], "mu": basis.mu,
               "p": syzygy_to_json(basis.p), "q": syzygy_to_json(basis.q)}
    return ({"outputs": out}, f"a = {triple.a}\nb = {triple.b}\nc = {triple.c}\nmu = {out['mu']}")


def cmd_census(args, ctx, doc):
    if args.n is None:
        raise UsageError("--n is required")
    report = census(args.n, args.count, ctx, seed=args.seed, jobs=args.jobs)
    hist = ", ".join(f"mu={k}: {v}" for k, v in report.histogram.items())
    return {"outputs": report.to_dict()}, f"n = {args.n}, samples = {args.count}\n{hist}"


def cmd_probe(args, ctx, doc):
    triple = _triple(args, ctx, doc)
    seq, report = construct(triple, _policy(args), seed=args.seed)
    L = seq.ctx.base
    if args.eps:
        values = [L.convert(_fraction(v)) for v in args.eps.split(",")]
    else:
        rng = random.Random(args.seed)
        values = [L.zero] + [L.random(rng) for _ in range(10)]
    probe = specialization_probe(seq, values)
    rows = [{"eps": L.to_json(v), "mu": m} for v, m in probe]
    text = "\n".join(f"eps = {L.format(v)}: mu = {m}" for v, m in probe)
    return ({"inputs": _inputs_json(triple),
             "outputs": {"target_mu": seq.target_mu, "probe": rows}}, text)


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="q | fp:<p> | fp:<p>/<monic poly in x>")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--timing", action="store_true", help="include wall time in JSON")
    common.add_argument("--candidates", default=None, help="comma-separated alpha candidates")
    common.add_argument("--budget", type=int, default=200)
    common.add_argument("--allow-extension", action="store_true")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--file", default=None, help="read inputs from a JSON document")
    common.add_argument("--lam", default=None, help="shear parameter lambda")
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--mu", type=int, default=None)
    common.add_argument("--count", type=int, default=1000)
    common.add_argument("--eps", default=None, help="comma-separated eps values for probe")

    parser = argparse.ArgumentParser(prog="muclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("polys", nargs="*")
    return parser


def _protect_negatives(argv):
    # "-t^5+t" is an expression, not an option; a leading space keeps argparse off it
    return [" " + a if a.startswith("-") and not a.startswith("--") and a not in ("-h",) else a
            for a in argv]


def run(argv=None, out=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    start = time.perf_counter()
    try:
        doc = _load_file(args.file) if args.file else None
        ctx = _field_from(args, doc)
        result = HANDLERS[args.command](args, ctx, doc)
    except MuClassError as exc:
        _emit_error(args, exc, out)
        return exc.exit_status
    except (OSError, ValueError) as exc:
        _emit_error(args, UsageError(str(exc)), out)
        return 2
    document, text, *rest = result
    status = rest[0] if rest else 0
    if args.json:
        full = {"command": args.command, "field": ctx.descriptor(), "seed": args.seed}
        full.update(document)
        if args.timing:
            full["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        out.write(json.dumps(full, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")
    return status


def _emit_error(args, exc, out):
    if args.json:
        out.write(json.dumps({"command": args.command,
                              "error": {"code": exc.code, "message": str(exc)}},
                             indent=2, sort_keys=True) + "\n")
    else:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
