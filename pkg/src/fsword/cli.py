"""Command-line interface.

Exit status: 0 for an affirmative answer, 1 for a negative one (word not
FS, length impossible, morphism not certified), 2 for usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, constructor, search
from .morphism import certify_hn
from .words import ALPHABETS, B, CircularWord, Word, first_non_fs_square, first_square

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class DataError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    try:
        return int(os.environ.get("FSWORD_SEED", "0"))
    except ValueError:
        raise DataError("FSWORD_SEED must be an integer") from None


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_check(args) -> int:
    alphabet = ALPHABETS[args.alphabet] if args.alphabet else None
    try:
        w = Word(args.word, alphabet or (B if set(args.word) <= {"0", "1"} else ALPHABETS["T"]))
    except ValueError as exc:
        raise DataError(str(exc)) from None
    squarefree = args.squarefree or w.alphabet != B
    kind = ("circular " if args.circular else "") + ("square-free" if squarefree else "FS")
    text = CircularWord.of(w).text if args.circular else w.text
    occ = (first_square if squarefree else first_non_fs_square)(text, args.circular)
    payload = {"word": args.word, "circular": args.circular, "property": kind.split()[-1],
               "holds": occ is None}
    if occ is None:
        _emit(args, payload, kind)
        return EXIT_YES
    payload["square"] = {"index": occ.index, "period": occ.period, "root": occ.root}
    where = "of the necklace " + text if args.circular else ""
    _emit(args, payload,
          f"not {kind}: square ({occ.root})^2 at index {occ.index} {where}".rstrip())
    return EXIT_NO


def cmd_construct(args) -> int:
    cert = constructor.construct(args.m, seed=_seed(args))
    if args.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(cert.to_json(indent=2) + "\n")
    if cert.kind == "impossible":
        nodes = cert.stamp.get("nodes_explored") if cert.stamp else None
        _emit(args, cert.to_dict(),
              f"impossible (forbidden length; exhaustive search, {nodes} nodes)")
        return EXIT_NO
    if cert.kind == "recipe":
        r = cert.recipe
        how = (f"f_{r.morphism_id} roles={r.roles} i={r.i} j={r.j} k={r.k} "
               f"{r.target}->d")
    else:
        how = "explicit"
    _emit(args, cert.to_dict(), f"{cert.witness}  # {how}")
    return EXIT_YES


def cmd_replay(args) -> int:
    try:
        with open(args.file) as fh:
            cert = constructor.LengthCertificate.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise DataError(f"cannot read certificate: {exc}") from None
    try:
        word = constructor.replay(cert)
    except constructor.CertificateError as exc:
        _emit(args, {"m": cert.m, "verified": False, "error": str(exc)}, f"rejected: {exc}")
        return EXIT_NO
    _emit(args, {"m": cert.m, "verified": True, "witness": word.text}, word.text)
    return EXIT_YES


def cmd_coverage(args) -> int:
    left = constructor.knockout(args.max)
    _emit(args, {"max": args.max, "unreachable": left}, " ".join(map(str, left)))
    return EXIT_YES


def _load_morphism(source: str):
    if source.startswith("builtin:"):
        try:
            return catalog.morphism(int(source.split(":", 1)[1]))
        except (ValueError, KeyError) as exc:
            raise DataError(f"bad builtin morphism {source!r}: {exc}") from None
    try:
        with open(source) as fh:
            return catalog.parse_morphism(fh.read())
    except (OSError, ValueError) as exc:
        raise DataError(str(exc)) from None


def cmd_morphism(args) -> int:
    f = _load_morphism(args.source)
    report = certify_hn(f)
    payload = {
        "passed": report.passed,
        "synchronizer": report.synchronizer,
        "prefix_length": report.prefix_length,
        "image_lengths": list(f.lengths),
        "failure": None if report.passed else report.describe(),
    }
    _emit(args, payload, report.describe())
    return EXIT_YES if report.passed else EXIT_NO


def cmd_search(args) -> int:
    if args.range:
        lo, hi = args.range
    elif args.m is not None:
        lo = hi = args.m
    else:
        raise DataError("search needs a length or --range LO HI")
    try:
        outcomes = search.decide_range(lo, hi, args.count, args.max_length)
    except ValueError as exc:
        raise DataError(str(exc)) from None
    for o in outcomes:
        _emit(args, o.to_dict(), o.line())
    if args.range:
        return EXIT_YES
    return EXIT_YES if outcomes[0].exists else EXIT_NO


def cmd_catalog(args) -> int:
    if args.action == "verify":
        problems = catalog.verify_all()
        for p in problems:
            print(p, file=sys.stderr)
        entries, fixtures = catalog.load_catalog() if not problems else ((), ())
        _emit(args, {"ok": not problems, "problems": problems},
              "catalog ok: {} morphisms, {} words".format(len(entries), len(fixtures))
              if not problems else f"{len(problems)} problem(s)")
        return EXIT_YES if not problems else EXIT_NO
    if args.id is None:
        raise DataError("catalog export needs --id R")
    try:
        f = catalog.morphism(args.id)
    except KeyError as exc:
        raise DataError(str(exc)) from None
    sys.stdout.write(f"# f_{args.id}\n" + catalog.serialize_morphism(f))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker cap (all commands currently run single-threaded)")

    p = argparse.ArgumentParser(prog="fsword", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="test a word for FS / square-freeness")
    c.add_argument("word")
    c.add_argument("--circular", action="store_true")
    c.add_argument("--squarefree", action="store_true")
    c.add_argument("--alphabet", choices=sorted(ALPHABETS))
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", parents=[common], help="certified circular FS word of length m")
    c.add_argument("m", type=int)
    c.add_argument("--certificate", metavar="FILE")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("replay", parents=[common], help="re-verify a certificate file")
    c.add_argument("file")
    c.set_defaults(func=cmd_replay)

    c = sub.add_parser("coverage", parents=[common], help="lengths the catalog formulas miss")
    c.add_argument("--max", type=int, default=constructor.LARGE_M)
    c.set_defaults(func=cmd_coverage)

    c = sub.add_parser("morphism", parents=[common], help="certify a morphism")
    c.add_argument("action", choices=["check"])
    c.add_argument("source", help="morphism file or builtin:R")
    c.set_defaults(func=cmd_morphism)

    c = sub.add_parser("search", parents=[common], help="exhaustive existence search")
    c.add_argument("m", type=int, nargs="?")
    c.add_argument("--count", action="store_true")
    c.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    c.add_argument("--max-length", type=int, default=search.DEFAULT_MAX_LENGTH)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("catalog", parents=[common], help="verify or export the embedded tables")
    c.add_argument("action", choices=["verify", "export"])
    c.add_argument("--id", type=int)
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DataError, ValueError) as exc:
        print(f"fsword {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
