"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed,
2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import __version__
from .conjugacy import FamilyParams, sweep_csv, sweep_family, verify_conjugacy, write_atomic
from .errors import BraidError, ParameterError, WordFormatError
from .garside import equal, normal_form
from .invariants import alexander, surface_slope
from .ttk import TTKParams, fiberedness_certificate, run_lemma_suite, ttk_braid
from .words import format_word, parse_word

OK, CHECK_FAILED, USAGE = 0, 1, 2

CONFIG_ENV = "BRAIDFORGE_CONFIG"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def load_config(path: str | None = None) -> dict[str, str]:
    """Read ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    cfg = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParameterError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            cfg[key.strip()] = value.strip()
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidforge", description="Exact braid computations for twisted torus knots.")
    parser.add_argument("--version", action="version", version=f"braidforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ttk_opts(p):
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        p.add_argument("-r", type=int, required=True)
        p.add_argument("-n", type=int, required=True)

    def fam_opts(p):
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        p.add_argument("-m", type=int, required=True)

    ttk_opts(sub.add_parser("build", help="print the braid word of K(p,q,r,n)"))

    p = sub.add_parser("nf", help="print the Garside normal form of a word")
    p.add_argument("word")

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("fibered", help="fiberedness certificate for K(p,q,r,n)")
    ttk_opts(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true", help="check every rewrite step by normal form")

    p = sub.add_parser("alexander", help="Alexander polynomial of a braid closure")
    p.add_argument("word")

    fam_opts(sub.add_parser("slope", help="surface slope k q^2 + m q - m^2"))

    p = sub.add_parser("conjugacy", help="conjugacy certificate for the (k,q,m) family")
    fam_opts(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="certificates for every admissible (k,q,m) within bounds")
    p.add_argument("--kmax", type=int)
    p.add_argument("--qmax", type=int)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--limit", type=int)

    p = sub.add_parser("lemmas", help="exhaustive check of the rewrite rules")
    p.add_argument("--smax", type=int)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_fibered(args) -> int:
    cert = fiberedness_certificate(TTKParams(args.p, args.q, args.r, args.n), verify_steps=args.verify)
    if args.json:
        _emit(cert.to_json())
    else:
        lines = [f"{cert.params}: {cert.status.value}"]
        if cert.witness is not None:
            lines.append(f"witness: {format_word(cert.witness)}")
        if cert.alexander:
            lines.append(f"alexander: {cert.alexander}")
        for name, ok in cert.checks.items():
            lines.append(f"check {name}: {'pass' if ok else 'FAIL'}")
        lines.append(f"verdict: {'valid' if cert.valid else 'FAILED'}")
        _emit("\n".join(lines))
    return OK if cert.valid else CHECK_FAILED


def _cmd_conjugacy(args) -> int:
    cert = verify_conjugacy(FamilyParams(args.k, args.q, args.m))
    if args.json:
        _emit(cert.to_json())
    else:
        lines = [
            f"K1 = {cert.family.knot1}, K2 = {cert.family.knot2}",
            f"gamma: {format_word(cert.gamma)}",
            f"nf(beta1*gamma): {cert.nf_left}",
            f"nf(gamma*beta2): {cert.nf_right}",
            f"slope: {cert.slope}",
            f"seifert_data: {cert.seifert_data}",
        ]
        for name, ok in cert.checks.items():
            lines.append(f"check {name}: {'pass' if ok else 'FAIL'}")
        lines.append(f"verdict: {'valid' if cert.valid else 'FAILED'}")
        _emit("\n".join(lines))
    return OK if cert.valid else CHECK_FAILED


def _cmd_sweep(args, cfg) -> int:
    k_max = args.kmax if args.kmax is not None else int(cfg.get("kmax", 0))
    q_max = args.qmax if args.qmax is not None else int(cfg.get("qmax", 0))
    if not k_max or not q_max:
        raise _UsageError("sweep: --kmax and --qmax are required (flag or config file)")
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", 1))
    out = args.out or cfg.get("out")
    if out and cfg.get("out_dir") and not os.path.isabs(out):
        out = os.path.join(cfg["out_dir"], out)
    result = sweep_family(k_max, q_max, start=args.start, limit=args.limit, jobs=jobs)
    text = sweep_csv(result.certificates)
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)
    bad = [c for c in result.certificates if not c.valid]
    for c in bad:
        print(f"FAILED {c.family.as_dict()}: {', '.join(c.failed_checks)}", file=sys.stderr)
    summary = f"{len(result.certificates)} certificates, {len(bad)} failed"
    if result.cursor is not None:
        summary += f"; resume with --start {result.cursor}"
    print(summary, file=sys.stderr)
    return CHECK_FAILED if bad else OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config()
        if args.command == "build":
            _emit(format_word(ttk_braid(TTKParams(args.p, args.q, args.r, args.n))))
            return OK
        if args.command == "nf":
            _emit(normal_form(parse_word(args.word)).serialize())
            return OK
        if args.command == "eq":
            same = equal(parse_word(args.word1), parse_word(args.word2))
            _emit("true" if same else "false")
            return OK if same else CHECK_FAILED
        if args.command == "fibered":
            return _cmd_fibered(args)
        if args.command == "alexander":
            _emit(alexander(parse_word(args.word)).poly.format())
            return OK
        if args.command == "slope":
            _emit(str(surface_slope(args.k, args.q, args.m)))
            return OK
        if args.command == "conjugacy":
            return _cmd_conjugacy(args)
        if args.command == "sweep":
            return _cmd_sweep(args, cfg)
        if args.command == "lemmas":
            smax = args.smax if args.smax is not None else int(cfg.get("smax", 7))
            report = run_lemma_suite(smax)
            _emit(report.summary())
            return OK if report.ok else CHECK_FAILED
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE
    except WordFormatError as exc:
        where = f" (token {exc.position})" if exc.position is not None else ""
        print(f"braidforge: bad word{where}: {exc}", file=sys.stderr)
        return USAGE
    except BraidError as exc:
        print(f"braidforge: {exc}", file=sys.stderr)
        return USAGE
    except (OSError, ValueError) as exc:
        print(f"braidforge: {exc}", file=sys.stderr)
        return USAGE
    return USAGE


def main(argv: Sequence[str] | None = None) -> None:
    try:
        code = run(argv)
    except SystemExit as exc:  # --help / --version
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)


if __name__ == "__main__":
    main()
