"""mbword command line: power, word, sweep, oracle and field subcommands."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .deciders import (
    MB,
    NOT_MB,
    NOT_VSMB,
    NOT_VWMB,
    UNDECIDED_KIND,
    VSMB,
    VWMB,
    DeciderOpts,
    UnsupportedScopeError,
    decide_power,
    decide_vsmb,
    decide_vwmb,
    sweep,
)
from .ff import FieldError, UnsupportedSizeError, find_irreducible, is_irreducible, is_primitive
from .oracle import SUITES, run_suite
from .words import WordError, parse

log = logging.getLogger("mbword")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
EXIT_NOT, EXIT_UNDECIDED = 10, 20

KIND_EXIT = {
    MB: EXIT_OK, VSMB: EXIT_OK, VWMB: EXIT_OK,
    NOT_MB: EXIT_NOT, NOT_VSMB: EXIT_NOT, NOT_VWMB: EXIT_NOT,
    UNDECIDED_KIND: EXIT_UNDECIDED,
}


class UsageError(Exception):
    pass


def _config(args) -> dict:
    return {"seed": args.seed, "budget": args.budget, "threshold": args.threshold,
            "jobs": args.jobs, "format": "json" if args.json else "text"}


def _opts(args) -> DeciderOpts:
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    if args.threshold < 1:
        raise UsageError("--threshold must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    return DeciderOpts(seed=args.seed, budget=args.budget, threshold=args.threshold)


def _dump(obj, args, text: str):
    if args.json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


def cmd_power(args) -> int:
    opts = _opts(args)
    if args.e == 0:
        raise UsageError("x^0 is the empty word")
    v = decide_power(args.e, opts)
    out = v.to_json()
    out["config"] = _config(args)
    lines = [f"x^{args.e}: {v.kind}"]
    for c in v.certificates:
        where = c.get("group", "")
        lines.append(f"  certificate ({c['kind']}) on {where}"
                     + (f" coset {c['coset']}" if "coset" in c else "")
                     + f", reverified={c.get('reverified')}")
    lines.append(f"  tasks: {len(v.tasks)}  elapsed {v.elapsed:.2f}s")
    _dump(out, args, "\n".join(lines))
    return KIND_EXIT[v.kind]


def cmd_word(args) -> int:
    opts = _opts(args)
    try:
        w = parse(args.text)
    except WordError as exc:
        raise UsageError(str(exc)) from exc
    if not w.letters:
        raise UsageError(f"{args.text!r} reduces to the empty word")
    fn = decide_vsmb if args.mode == "vsmb" else decide_vwmb
    v = fn(w, opts)
    out = v.to_json()
    out["mode"] = args.mode
    out["config"] = _config(args)
    text = f"{v.input}: {v.kind}"
    if v.derivation is not None:
        text += f"  (rule {v.derivation.get('rule')})"
    text += f"\n  tasks: {len(v.tasks)}  elapsed {v.elapsed:.2f}s"
    _dump(out, args, text)
    return KIND_EXIT[v.kind]


def _load_cached(path: Path) -> dict:
    cached = {}
    if not path.exists():
        return cached
    for line in path.read_text().splitlines():
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            break  # a torn last line from an interrupted run
        if rec.get("type") == "word":
            cached[rec["word"]] = rec
    return cached


def cmd_sweep(args) -> int:
    opts = _opts(args)
    if not 1 <= args.l <= 8:
        raise UsageError("sweep length must be in 1..8")
    cached = {}
    if args.resume:
        if args.out is None:
            raise UsageError("--resume needs --out")
        cached = _load_cached(Path(args.out))
        log.info("resuming with %d cached words", len(cached))
    sink = open(args.out, "w") if args.out else sys.stdout

    def emit(rec):
        sink.write(json.dumps(rec) + "\n")
        sink.flush()
        if args.out and not args.json and rec.get("type") == "length-result":
            print(f"length {rec['l']}: certified={rec['certified']}", file=sys.stderr)

    header = {"type": "config", "command": "sweep", "l": args.l, "version": __version__}
    header.update(_config(args))
    emit(header)
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                summary = sweep(args.l, opts, emit,
                                mapper=lambda f, xs: pool.map(f, xs, chunksize=1), cached=cached)
        else:
            summary = sweep(args.l, opts, emit, cached=cached)
        emit(summary)
    finally:
        if sink is not sys.stdout:
            sink.close()
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    if args.name != "all" and args.name not in SUITES:
        raise UsageError(f"unknown check {args.name!r}; choose from all, {', '.join(SUITES)}")
    results, elapsed = run_suite(args.name)
    ok = all(r.passed for r in results)
    if args.json:
        for r in results:
            print(json.dumps(r.to_json()))
        print(json.dumps({"check": args.name, "pass": ok, "count": len(results),
                          "elapsed": round(elapsed, 3), "config": _config(args)}))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} {json.dumps(r.inputs)}")
        print(f"{sum(r.passed for r in results)}/{len(results)} passed in {elapsed:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


def _coeffs(text: str) -> list[int]:
    try:
        return [int(c) for c in text.replace(" ", "").split(",") if c != ""]
    except ValueError as exc:
        raise UsageError(f"bad coefficient list {text!r}") from exc


def cmd_field(args) -> int:
    if args.field_cmd == "find-irreducible":
        poly = find_irreducible(args.p, args.k, args.seed, primitive=args.primitive)
        out = {"p": args.p, "k": args.k, "seed": args.seed, "modulus": poly,
               "irreducible": is_irreducible(poly, args.p)}
        if args.primitive:
            out["primitive"] = True
        _dump(out, args, " ".join(map(str, poly)))
        return EXIT_OK if out["irreducible"] else EXIT_FAIL
    poly = _coeffs(args.coeffs)
    if len(poly) != args.k + 1 or poly[-1] % args.p == 0:
        raise UsageError(f"expected {args.k + 1} coefficients (low to high) with nonzero leading term")
    irr = is_irreducible(poly, args.p)
    try:
        prim = is_primitive(poly, args.p) if irr else False
    except UnsupportedSizeError:
        if args.primitive:
            raise
        prim = None
    out = {"p": args.p, "k": args.k, "modulus": poly, "irreducible": irr, "primitive": prim}
    _dump(out, args, f"irreducible={irr} primitive={prim}")
    if not irr or (args.primitive and not prim):
        return EXIT_FAIL
    return EXIT_OK


def _add_globals(p: argparse.ArgumentParser, top: bool):
    # on subparsers the defaults are suppressed so flags may come before or after the command
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget", type=int, default=d(256), help="random witness samples per assignment")
    p.add_argument("--threshold", type=int, default=d(10**7), help="cap for exhaustive evaluation")
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--json", action="store_true", default=d(False))
    p.add_argument("--resume", action="store_true", default=d(False))
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mbword", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    _add_globals(ap, True)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("power", help="decide x^e")
    p.add_argument("e", type=int)
    p.set_defaults(fn=cmd_power)

    p = sub.add_parser("word", help="decide a word")
    p.add_argument("text")
    p.add_argument("--mode", choices=["vsmb", "vwmb"], default="vsmb")
    p.set_defaults(fn=cmd_word)

    p = sub.add_parser("sweep", help="certify all words up to a length")
    p.add_argument("l", type=int)
    p.add_argument("--out", help="write JSON lines here (needed for --resume)")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("oracle", help="brute-force checks")
    p.add_argument("name")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("field", help="irreducible polynomials")
    fs = p.add_subparsers(dest="field_cmd", required=True, parser_class=_Parser)
    f = fs.add_parser("find-irreducible")
    f.add_argument("p", type=int)
    f.add_argument("k", type=int)
    f.add_argument("--primitive", action="store_true")
    f = fs.add_parser("verify")
    f.add_argument("p", type=int)
    f.add_argument("k", type=int)
    f.add_argument("coeffs", help="comma separated, low degree first")
    f.add_argument("--primitive", action="store_true", help="require primitivity")
    p.set_defaults(fn=cmd_field)

    for sp in list(sub.choices.values()) + list(fs.choices.values()):
        _add_globals(sp, False)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        return args.fn(args)
    except UsageError as exc:
        print(f"mbword: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedSizeError, UnsupportedScopeError) as exc:
        print(f"mbword: unsupported size: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (WordError, FieldError) as exc:
        print(f"mbword: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
