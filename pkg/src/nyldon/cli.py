"""Command line front end.

Exit codes: 0 pass/yes, 1 fail/no, 2 usage or limit errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import theorems
from .errors import WordError
from .lyndon import is_lyndon, lyndon_factorization
from .nf import enumerate_nyldon, is_nyldon, lnps, nyldon_factorization
from .words import (
    AB,
    DEFAULT_CAP,
    Alphabet,
    family,
    fibonacci,
    make_word,
    thue_morse,
    tm_prefix,
    w_seq,
    w_tilde_seq,
)

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    """Settings shared by every subcommand."""

    alphabet: Alphabet = AB
    cap: int = DEFAULT_CAP
    output: str = "text"  # text | json
    source: str = "arg"  # arg | file | stdin (commands that read a word)

    def __post_init__(self):
        if self.cap < 1:
            raise _UsageError("--cap must be >= 1")
        if self.output not in ("text", "json"):
            raise _UsageError(f"unknown output format {self.output!r}")
        if self.source not in ("arg", "file", "stdin"):
            raise _UsageError(f"unknown input source {self.source!r}")

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        word, path = getattr(args, "word", None), getattr(args, "file", None)
        if word is not None and path is not None:
            raise _UsageError("give either a word or --file, not both")
        source = "arg" if word is not None else "file" if path is not None else "stdin"
        return cls(Alphabet(args.alphabet), args.cap, "json" if args.json else "text", source)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    _busy = False

    def parse_known_args(self, args=None, namespace=None):
        # leaf commands accept the word after flags (``factorize nyldon --json abba``);
        # argparse only supports that for parsers without subparsers or exclusive groups
        if self._busy or self._subparsers is not None or self._mutually_exclusive_groups:
            return super().parse_known_args(args, namespace)
        self._busy = True
        try:
            return self.parse_known_intermixed_args(args, namespace)
        finally:
            self._busy = False

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if status:
            raise _UsageError(message or "")
        raise _HelpShown(message or "")


class _HelpShown(Exception):
    pass


def _global_flags(parser, suppress=False):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--alphabet", default=default("ab"),
                        help="ordered symbol listing (default: ab)")
    parser.add_argument("--cap", type=int, default=default(DEFAULT_CAP),
                        help="maximum generated word length")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="JSON output")


def _word_input(parser):
    parser.add_argument("word", nargs="?", help="the word (default: first line of --file or stdin)")
    parser.add_argument("--file", help="read the word from the first line of this file")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)

    parser = _Parser(prog="nyldon", description=__doc__.splitlines()[0])
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="generate a named word")
    gsub = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gsub.add_parser("fib", parents=[common]).add_argument("--k", type=int, required=True)
    gsub.add_parser("tm", parents=[common]).add_argument("--n", type=int, required=True)
    gsub.add_parser("tm-prefix", parents=[common]).add_argument("--len", type=int, required=True)
    fam = gsub.add_parser("family", parents=[common])
    fam.add_argument("--ell", type=int, required=True)
    fam.add_argument("--k", type=int, required=True)
    gsub.add_parser("wseq", parents=[common]).add_argument("--n", type=int, required=True)
    gsub.add_parser("wtilde", parents=[common]).add_argument("--n", type=int, required=True)

    fac = sub.add_parser("factorize", parents=[common], help="Nyldon or Lyndon factorization")
    fac.add_argument("kind", choices=["nyldon", "lyndon"])
    _word_input(fac)

    chk = sub.add_parser("check", parents=[common], help="is the word Nyldon / Lyndon")
    chk.add_argument("kind", choices=["nyldon", "lyndon"])
    _word_input(chk)

    lp = sub.add_parser("lnps", parents=[common], help="longest Nyldon proper suffix")
    lp.add_argument("--method", choices=["auto", "table", "scan"], default="auto")
    _word_input(lp)

    en = sub.add_parser("enumerate", parents=[common], help="list Nyldon words")
    en.add_argument("kind", choices=["nyldon"])
    en.add_argument("--max-len", type=int, required=True)

    ver = sub.add_parser("verify", parents=[common], help="check a claim over a finite range")
    which = ver.add_mutually_exclusive_group(required=True)
    which.add_argument("--claim", choices=sorted(theorems.CLAIMS))
    which.add_argument("--all", action="store_true")
    ver.add_argument("--max", type=int, help="upper bound of the claim's main parameter")
    ver.add_argument("--mode", choices=theorems.FAMILY_MODES, help="family-table mode")
    ver.add_argument("--lnps-max", type=int, help="upper bound for lnps checks (fib-lnps, family-table)")
    ver.add_argument("--nyldon-max", type=int, help="upper bound for Nyldon checks (family-table)")
    ver.add_argument("--table", choices=sorted(theorems.LNPS_TABLES),
                     help="family-table lnps table variant")
    return parser


def _read_word(args, alphabet, stdin):
    if args.word is not None:
        text = args.word
    elif args.file is not None:
        with open(args.file, encoding="ascii") as fh:
            text = fh.readline()
    else:
        text = stdin.readline()
    return make_word(text.rstrip("\r\n"), alphabet)


def _cmd_gen(args, alphabet, out):
    cap = args.cap
    if args.kind == "fib":
        w = fibonacci(args.k, alphabet, cap)
    elif args.kind == "tm":
        w = thue_morse(args.n, alphabet, cap)
    elif args.kind == "tm-prefix":
        w = tm_prefix(args.len, alphabet, cap)
    elif args.kind == "family":
        w = family(args.ell, args.k, alphabet, cap)
    elif args.kind == "wseq":
        w = w_seq(args.n, alphabet, cap)
    else:
        w = w_tilde_seq(args.n, alphabet, cap)
    out.write(w.text + "\n")
    return EXIT_OK


def _cmd_factorize(args, alphabet, out, stdin):
    w = _read_word(args, alphabet, stdin)
    fact = nyldon_factorization(w).factorization if args.kind == "nyldon" else lyndon_factorization(w)
    if args.json:
        factors = [{"start": s, "len": e - s, "text": w.data[s:e].decode("ascii")}
                   for s, e in fact.spans()]
        json.dump({"word_len": len(w), "factors": factors}, out)
        out.write("\n")
    else:
        for text in fact.texts():
            out.write(text + "\n")
    return EXIT_OK


def _cmd_check(args, alphabet, out, stdin):
    w = _read_word(args, alphabet, stdin)
    yes = is_nyldon(w) if args.kind == "nyldon" else is_lyndon(w)
    if args.json:
        json.dump({"word_len": len(w), "kind": args.kind, "answer": yes}, out)
        out.write("\n")
    else:
        out.write("yes\n" if yes else "no\n")
    return EXIT_OK if yes else EXIT_NO


def _cmd_lnps(args, alphabet, out, stdin):
    w = _read_word(args, alphabet, stdin)
    s = lnps(w, method=args.method)
    if args.json:
        json.dump({"word_len": len(w), "start": len(w) - len(s), "len": len(s), "text": s.text}, out)
        out.write("\n")
    else:
        out.write(s.text + "\n")
    return EXIT_OK


def _cmd_enumerate(args, alphabet, out):
    words = enumerate_nyldon(alphabet, args.max_len)
    if args.json:
        json.dump([w.text for w in words], out)
        out.write("\n")
    else:
        for w in words:
            out.write(w.text + "\n")
    return EXIT_OK


def _verify_kwargs(args) -> dict:
    kwargs = {}
    if args.mode is not None:
        kwargs["mode"] = args.mode
    if args.table is not None:
        kwargs["table"] = args.table
    if args.lnps_max is not None:
        kwargs["lnps_k_max"] = args.lnps_max
    if args.nyldon_max is not None:
        kwargs["nyldon_k_max"] = args.nyldon_max
    return kwargs


def _cmd_verify(args, out):
    if args.all:
        if args.max is not None or _verify_kwargs(args):
            raise _UsageError("--all runs default ranges; drop --max/--mode/--table/--*-max")
        reports = theorems.run_all()
    else:
        kwargs = _verify_kwargs(args)
        fn = theorems.CLAIMS[args.claim]
        unknown = [k for k in kwargs if k not in fn.__code__.co_varnames]
        if unknown:
            raise _UsageError(f"claim {args.claim} does not take {', '.join(unknown)}")
        try:
            reports = [theorems.run_claim(args.claim, args.max, **kwargs)]
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    if args.json:
        payload = [r.to_dict() for r in reports] if args.all else reports[0].to_dict()
        json.dump(payload, out)
        out.write("\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        if args.all:
            passed = sum(r.passed for r in reports)
            out.write(f"{passed}/{len(reports)} claims pass\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NO


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        alphabet = CliConfig.from_args(args).alphabet
        if args.command == "gen":
            return _cmd_gen(args, alphabet, out)
        if args.command == "factorize":
            return _cmd_factorize(args, alphabet, out, inp)
        if args.command == "check":
            return _cmd_check(args, alphabet, out, inp)
        if args.command == "lnps":
            return _cmd_lnps(args, alphabet, out, inp)
        if args.command == "enumerate":
            return _cmd_enumerate(args, alphabet, out)
        return _cmd_verify(args, out)
    except _HelpShown:
        return EXIT_OK
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_ERROR
    except WordError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
