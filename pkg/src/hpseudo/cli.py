"""Command line driver.

    hpseudo validate --spec abelian2.alg
    hpseudo singular --spec frobenius2.alg --sp-rep pi:1 --lambda 1

Exit codes: 0 pass, 2 parse or usage error, 3 a verification failed.
"""
import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources

import yaml

from .algebra import SpecError, battery, load_spec, validate_spec
from .forms import SpBasis, SpRepresentation
from .linalg import frac
from .report import make_report, render, summary_lines
from . import suite

EXIT_OK, EXIT_PARSE, EXIT_FAIL = 0, 2, 3
BUNDLED = ("abelian2.alg", "frobenius2.alg", "twisted2.alg", "abelian4.alg", "frobenius4.alg")


def resolve_spec(path):
    if os.path.exists(path):
        return load_spec(path)
    name = os.path.basename(path)
    if name in BUNDLED:
        with resources.as_file(resources.files("hpseudo") / "data" / name) as p:
            return load_spec(p)
    raise SpecError("no such spec file: %s" % path)


def _matrices(raw, dim, what):
    try:
        mats = [[[frac(x) for x in row] for row in m] for m in raw]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecError("bad entry in %s: %s" % (what, exc)) from None
    if not mats or any(len(m) != len(mats[0]) or any(len(r) != len(m) for r in m) for m in mats):
        raise SpecError("%s must be square matrices of equal size" % what)
    if dim is not None and len(mats) != dim:
        raise SpecError("%s needs %d matrices, got %d" % (what, dim, len(mats)))
    return mats


def _load_yaml(path):
    try:
        with open(path) as fh:
            return yaml.safe_load(fh)
    except OSError as exc:
        raise SpecError(str(exc)) from None
    except yaml.YAMLError as exc:
        raise SpecError("not valid YAML: %s" % exc) from None


def load_pi(path, spec):
    """A d-module file: {act: [2N square matrices]} giving rho(d_1), ..., rho(d_2N)."""
    if path is None:
        return None
    data = _load_yaml(path)
    if not isinstance(data, dict) or "act" not in data:
        raise SpecError("%s: expected a mapping with key 'act'" % path)
    return _matrices(data["act"], spec.dim, "act")


def load_rep(selector, spec):
    """pi:n, trivial, vector, sym2, or a file {f: {"i,j": matrix}} with 1-based i <= j."""
    if selector is None or not os.path.exists(selector):
        return selector
    data = _load_yaml(selector)
    if not isinstance(data, dict) or not isinstance(data.get("f"), dict):
        raise SpecError("%s: expected a mapping with key 'f'" % selector)
    spb = SpBasis(spec)
    f = {}
    for key, m in data["f"].items():
        try:
            i, j = (int(x) - 1 for x in str(key).split(","))
        except ValueError:
            raise SpecError("bad sp basis key %r" % key) from None
        f[(min(i, j), max(i, j))] = _matrices([m], None, "f[%s]" % key)[0]
    if set(f) != set(spb.keys):
        raise SpecError("the file must give a matrix for every f^ij with i <= j")
    rep = SpRepresentation(spb, f, os.path.basename(selector))
    if not rep.is_lie_hom():
        raise SpecError("%s is not a representation of sp(d)" % selector)
    return rep


def _spec_sections(spec, args):
    """Everything `all` runs for one spec."""
    cap = args.degree_cap
    out = [suite.validate_section(spec)]
    if not out[0]["ok"]:
        return out
    out.append(suite.axioms_section(spec, min(cap, 4), args.jet_order))
    if spec.dim == 2:
        out.append(suite.derham_section(spec, cap))
    out.append(suite.complex_section(spec, None, cap))
    lams = [0]
    if spec.chi_is_zero():
        try:
            from .algebra import solve_frobenius_splitting
            solve_frobenius_splitting(spec)
            lams.append(1)
        except ValueError:
            pass
    for lam in lams:
        for n in range(spec.N + 1):
            out += suite.singular_section(spec, None, "pi:%d" % n, lam, cap)
    for n in range(1, spec.N + 1):
        out.append(suite.lattice_section(spec, None, n, cap))
    return out


def _battery_job(item):
    name, spec, ns = item
    return name, _spec_sections(spec, ns)


def run(args):
    cmd = args.command
    config = {"degree_cap": args.degree_cap, "jet_order": args.jet_order, "lambda": args.lam,
              "sp_rep": args.sp_rep, "pi_module": args.pi_module}
    if args.degree_cap < 2:
        raise SpecError("--degree-cap must be at least 2")
    if cmd == "all" and args.spec is None:
        specs = list(battery().items())
        config["spec"] = "bundled battery"
        jobs = [(k, s, args) for k, s in specs]
        if args.threads > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as ex:
                results = list(ex.map(_battery_job, jobs))
        else:
            results = [_battery_job(j) for j in jobs]
        sections = [s for _, secs in results for s in secs]
        return make_report(cmd, config, sections)
    if args.spec is None:
        raise SpecError("--spec is required for %s" % cmd)
    spec = resolve_spec(args.spec)
    config["spec"] = args.spec
    if cmd != "validate" and not validate_spec(spec).ok:
        return make_report(cmd, config, [suite.validate_section(spec)])
    pi = load_pi(args.pi_module, spec)
    rep = load_rep(args.sp_rep, spec)
    lam = args.lam
    if lam and not spec.chi_is_zero():
        raise SpecError("lambda != 0 requires chi = 0")
    if cmd == "validate":
        sections = [suite.validate_section(spec)]
    elif cmd == "axioms":
        sections = [suite.axioms_section(spec, min(args.degree_cap, 4), args.jet_order)]
        if spec.dim == 2:
            sections.append(suite.derham_section(spec, args.degree_cap))
    elif cmd == "complex":
        sections = [suite.complex_section(spec, pi, args.degree_cap)]
    elif cmd == "singular":
        sections = suite.singular_section(spec, pi, rep or "pi:1", lam, args.degree_cap)
    elif cmd == "lattice":
        n = None
        if isinstance(rep, str) and rep.startswith("pi:"):
            n = int(rep[3:])
        elif rep is not None:
            raise SpecError("lattice needs U = pi:n")
        sections = [suite.lattice_section(spec, pi, n, args.degree_cap, lam)]
    else:
        sections = _spec_sections(spec, args)
    return make_report(cmd, config, sections)


def _lambda(text):
    try:
        return frac(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("lambda must be a rational number") from None


def build_parser():
    p = argparse.ArgumentParser(prog="hpseudo", description="Exact checks for Hamiltonian Lie pseudoalgebras.")
    p.add_argument("command", choices=["validate", "axioms", "complex", "singular", "lattice", "all"])
    p.add_argument("--spec", help="a .alg file, or the name of a bundled one (e.g. abelian2.alg)")
    p.add_argument("--degree-cap", type=int, default=3, help="filtration degree cap D (default 3)")
    p.add_argument("--jet-order", type=int, default=4, help="jet truncation order for annihilation checks")
    p.add_argument("--pi-module", help="YAML file with the d-module matrices 'act' (default: 1-dim trivial)")
    p.add_argument("--sp-rep", help="pi:n, trivial, vector, sym2, or a YAML file of f^ij matrices")
    p.add_argument("--lambda", dest="lam", type=_lambda, default=Fraction(0), help="central charge (needs chi = 0)")
    p.add_argument("--out", help="write the YAML report here instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="worker processes for `all` over the battery")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        report = run(args)
    except SpecError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    text = render(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for line in summary_lines(report):
        print(line, file=sys.stderr)
    return EXIT_OK if report["verdict"] == "PASS" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
