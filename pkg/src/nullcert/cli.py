"""Command-line entry point.

Exit status: 0 decided/valid, 1 no solution/invalid, 2 usage or malformed
input, 3 I/O failure or a refused size limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from nullcert.certificate import ANSATZ_KINDS, Certificate, SizeLimitExceeded
from nullcert.engine.linsys import PIVOT_RULES
from nullcert.engine.solve import STRATEGIES
from nullcert.frontend import documents as docs

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from None


def _require_files(*paths: str | None) -> None:
    for p in paths:
        if p is not None and not Path(p).is_file():
            raise CliError(EXIT_IO, f"cannot read {p}: no such file")


def _load_system(path: str):
    try:
        return docs.parse_system(_read(path))
    except (docs.DocumentError, ValueError) as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}") from None


def _caps(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(EXIT_USAGE, f"--caps expects comma-separated integers, got {text!r}") from None


def cmd_solve(args) -> int:
    from nullcert.metrics import bound_report, counted_solve, presort_variables, unpermute_certificate
    from nullcert.oracle import verify

    _require_files(args.input)
    original = _load_system(args.input)
    system, perm = original, None
    if args.presort:
        system, perm = presort_variables(original)
    try:
        out, counter = counted_solve(system, args.strategy, args.ansatz, args.pivot,
                                     degree=args.degree, caps=_caps(args.caps))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    if args.count_steps:
        rep = bound_report(system, counter)
        ratio = rep.ratio
        print(f"steps: assignments={counter.assignments} arith={counter.arith_ops} "
              f"comparisons={counter.comparisons} total={counter.total} bits={counter.bits}",
              file=sys.stderr)
        print(f"bracket: {rep.bracket_value} ratio: {float(ratio) if ratio is not None else 'inf'}",
              file=sys.stderr)
    if isinstance(out, Certificate):
        if perm is not None and perm != tuple(range(system.n)):
            out = unpermute_certificate(out, perm)
        if not verify(original, out).is_zero:
            raise AssertionError("certificate failed verification on the original system")
        _write(args.output, docs.emit_certificate(out, original.n))
        if args.output not in (None, "-"):
            print(f"certificate found ({out.strategy}); written to {args.output}")
        return EXIT_OK
    print(str(out))
    if not out.conclusive:
        print("note: heuristic strategy only; try --strategy macaulay or auto", file=sys.stderr)
    if args.output not in (None, "-"):
        _write(args.output, docs.emit_no_solution(out))
    return EXIT_NEGATIVE


def cmd_verify(args) -> int:
    from nullcert.oracle import verify

    _require_files(args.system, args.certificate)
    system = _load_system(args.system)
    try:
        n, cert = docs.parse_certificate(_read(args.certificate))
    except (docs.DocumentError, ValueError) as exc:
        raise CliError(EXIT_USAGE, f"{args.certificate}: {exc}") from None
    if n != system.n or cert.k != system.k:
        print(f"INVALID: certificate shape (n={n}, k={cert.k}) does not match system "
              f"(n={system.n}, k={system.k})")
        return EXIT_NEGATIVE
    res = verify(system, cert)
    if res.is_zero:
        print("VALID: residual is 0")
        return EXIT_OK
    text = str(res.poly)
    if len(text) > 400:
        text = text[:400] + " ..."
    print(f"INVALID: residual has {len(res.poly)} terms: {text}")
    return EXIT_NEGATIVE


def cmd_encode(args) -> int:
    from nullcert.frontend.coloring import EdgeListError, encode_kcoloring, parse_edges
    from nullcert.frontend.sat import DimacsError, encode_3sat, parse_dimacs

    if (args.sat is None) == (args.coloring is None):
        raise CliError(EXIT_USAGE, "encode needs exactly one of --sat or --coloring")
    if args.sat is not None:
        _require_files(args.sat)
        try:
            system = encode_3sat(parse_dimacs(_read(args.sat)))
        except (DimacsError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"{args.sat}: {exc}") from None
    else:
        if args.k is None:
            raise CliError(EXIT_USAGE, "--coloring requires --k")
        _require_files(args.coloring)
        try:
            V, edges = parse_edges(_read(args.coloring))
            system = encode_kcoloring(edges, args.k, V or None)
        except (EdgeListError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"{args.coloring}: {exc}") from None
    _write(args.output, docs.emit_system(system))
    return EXIT_OK


def cmd_oracle(args) -> int:
    from nullcert.oracle import box_zero_search, dense_cert_search

    if args.box is None and args.dense is None:
        raise CliError(EXIT_USAGE, "oracle needs --box R and/or --dense D")
    _require_files(args.input)
    system = _load_system(args.input)
    found = False
    if args.box is not None:
        w = box_zero_search(system, args.box, args.max_points)
        if w is None:
            print(f"box R={args.box}: no common zero in Z[i]^{system.n} box")
        else:
            found = True
            print(f"box R={args.box}: common zero at ({', '.join(str(x) for x in w.point)})")
    if args.dense is not None:
        cert = dense_cert_search(system, args.dense)
        if cert is None:
            print(f"dense D={args.dense}: no certificate of total degree <= {args.dense}")
        else:
            found = True
            print(f"dense D={args.dense}: certificate found")
            if args.output:
                _write(args.output, docs.emit_certificate(cert, system.n))
            else:
                for i, g in enumerate(cert.g, start=1):
                    print(f"  g{i} = {g}")
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_bench(args) -> int:
    from nullcert.metrics import bench_csv, bench_run

    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CliError(EXIT_IO, f"cannot read {args.corpus}: not a directory")
    rows = bench_run(corpus, args.strategy, args.ansatz, args.pivot, args.presort, args.jobs,
                     degree=args.degree)
    _write(args.output, bench_csv(rows))
    return EXIT_OK


def cmd_generate(args) -> int:
    from nullcert.corpus import random_corpus

    out = Path(args.output)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot create {args.output}: {exc.strerror or exc}") from None
    width = len(str(max(args.count - 1, 0)))
    for i, s in enumerate(random_corpus(args.seed, args.count, max_n=args.max_n, max_k=args.max_k)):
        _write(str(out / f"inst{i:0{width}d}.json"), docs.emit_system(s))
    print(f"wrote {args.count} systems to {args.output} (seed {args.seed})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from nullcert.corpus import DEFAULT_SEED

    p = argparse.ArgumentParser(prog="nullcert", description="Nullstellensatz certificate search over Q(i).")
    sub = p.add_subparsers(dest="command", required=True)

    def solver_flags(sp):
        sp.add_argument("--strategy", choices=STRATEGIES, default="auto")
        sp.add_argument("--ansatz", choices=ANSATZ_KINDS, default="paper-rank")
        sp.add_argument("--degree", type=int, help="total degree for --ansatz total-degree")
        sp.add_argument("--pivot", choices=PIVOT_RULES, default="paper-tuple")
        sp.add_argument("--presort", action="store_true", help="reorder variables to minimise the bound")

    s = sub.add_parser("solve", help="search for a certificate")
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    solver_flags(s)
    s.add_argument("--caps", help="per-variable exponent caps, e.g. 2,1,3")
    s.add_argument("--count-steps", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check sum f_i g_i == 1 exactly")
    v.add_argument("--system", required=True)
    v.add_argument("--certificate", required=True)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("encode", help="encode a CNF or colouring instance")
    e.add_argument("--sat", metavar="FILE.cnf")
    e.add_argument("--coloring", metavar="EDGES")
    e.add_argument("--k", type=int)
    e.add_argument("--output")
    e.set_defaults(func=cmd_encode)

    o = sub.add_parser("oracle", help="box zero search and dense reference search")
    o.add_argument("--input", required=True)
    o.add_argument("--box", type=int, metavar="R")
    o.add_argument("--dense", type=int, metavar="D")
    o.add_argument("--max-points", type=int, default=10_000_000)
    o.add_argument("--output")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="run a corpus and write the CSV report")
    b.add_argument("--corpus", required=True)
    b.add_argument("--output")
    solver_flags(b)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("generate", help="write a seeded random corpus")
    g.add_argument("--output", required=True)
    g.add_argument("--count", type=int, default=50)
    g.add_argument("--seed", type=int, default=DEFAULT_SEED)
    g.add_argument("--max-n", type=int, default=3)
    g.add_argument("--max-k", type=int, default=3)
    g.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except SizeLimitExceeded as exc:
        print(f"error: refused: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
