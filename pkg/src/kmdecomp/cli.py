"""Command-line interface.

Every subcommand prints a JSON run report::

    {"subcommand": ..., "inputs": ..., "result": ..., "verified": ..., "seed": ..., "timing_s": ...}

Exit status: 0 when verified, 2 when a verification check failed, 1 on a
usage or input error (one line on stderr).
"""

import argparse
import json
import sys
import time

from . import __version__
from .coxeter import GCM, WeylElement, find_straight_candidate, is_straight
from .decomp import (
    birkhoff,
    cartan,
    diag_test,
    hole_witness,
    iwasawa,
    kak_word,
    nucleus_member,
    polar,
    sl2_sqrt,
)
from .dynkin import kuk_bound
from .errors import ConvergenceFailureError, InternalError, KMDecompError, OutsideBigCellError
from .involution import SubsetTag, ThetaSpec, is_member, tau
from .matgrp import GroupElement, Model, mul
from .ring import Ring
from .suite import run_lemmas


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


RING_NAMES = {r.value: r for r in Ring}


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--model", choices=[m.value for m in Model])
    p.add_argument("--ring", choices=sorted(RING_NAMES))
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--in", dest="input", metavar="PATH")
    p.add_argument("--out", metavar="PATH", default="-")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=20)
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="kmdecomp", description="Certified decompositions in split Kac-Moody groups.")
    parser.add_argument("--version", action="version", version=f"kmdecomp {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("tau", "twist map g -> g theta(g)^-1")
    add("member", "membership in K, Q, T, M, A, U+, U-, B+, B-").add_argument("--set", dest="tag", required=True)
    add("iwasawa", "refined Iwasawa g = k a u").add_argument("--side", choices=["+", "-"], default="+")
    add("birkhoff", "exact factorization g = u+ t u-").add_argument("--order", choices=["+-", "-+"], default="+-")
    add("cartan", "numeric g = k1 a k2 over Q")
    add("polar", "numeric g = p k over Q")
    add("kak", "K/A word for g over Q")
    add("diag-test", "characteristic polynomial obstruction to diagonalizability")
    add("sl2-sqrt", "theta-symmetric square root in SL_2")
    add("nucleus", "nucleus membership certificate").add_argument("--depth", type=int, default=8)
    add("hole", "non-diagonalizable witness in affine A_n").add_argument("--n", type=int, required=True)
    cox = add("coxeter", "Weyl group length and straightness")
    cox.add_argument("action", choices=["length", "straight", "find"])
    cox.add_argument("--gcm", required=True)
    cox.add_argument("--word", default="")
    cox.add_argument("--depth", type=int)
    add("cover", "minimal spherical covering and KUK bound").add_argument("--gcm", required=True)
    add("suite", "seeded self-checks").add_argument("--lemmas", action="store_true")
    return parser


# --------------------------------------------------------------------------
# input helpers


def _read_json(path):
    if path is None:
        raise UsageError("--in is required")
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def _ring_from_flags(args):
    ring = RING_NAMES[args.ring] if args.ring else None
    model = Model(args.model) if args.model else None
    if ring is not None and model is not None and Model.for_ring(ring) is not model:
        raise UsageError(f"ring {ring.value} is not part of the {model.value} model")
    if ring is None and model is not None:
        ring = Ring.LAURENT_Q if model is Model.AFFINE else Ring.Q
    return ring


def _load_element(args):
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "element" in obj:
        obj = obj["element"]
    if not isinstance(obj, dict) or "entries" not in obj:
        raise UsageError("input must be a matrix object with 'entries'")
    ring = _ring_from_flags(args)
    try:
        return GroupElement.from_json(obj, ring)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise UsageError(f"bad group element: {exc}") from None


def _load_gcm(path):
    obj = _read_json(path)
    try:
        return GCM.from_json(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad GCM: {exc}") from None


def _parse_word(text, n):
    if not text.strip():
        return []
    try:
        word = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad word {text!r}: expected comma-separated integers") from None
    for i in word:
        if not 1 <= i <= n:
            raise UsageError(f"generator {i} outside 1..{n}")
    return word


# --------------------------------------------------------------------------
# subcommands; each returns (inputs, result, verified)


def _cmd_tau(args):
    g = _load_element(args)
    spec = ThetaSpec.for_element(g)
    v = tau(spec, g)
    return {"g": g.to_json()}, {"tau": v.to_json()}, is_member(spec, SubsetTag.Q, v)


def _cmd_member(args):
    g = _load_element(args)
    try:
        tag = SubsetTag.parse(args.tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = ThetaSpec.for_element(g)
    return {"g": g.to_json(), "set": tag.value}, {"set": tag.value, "member": is_member(spec, tag, g)}, True


def _cmd_iwasawa(args):
    g = _load_element(args)
    f = iwasawa(g, side=args.side, tol=args.tol)
    return {"g": g.to_json(), "side": args.side}, f.to_json(), f.verified


def _cmd_birkhoff(args):
    g = _load_element(args)
    inputs = {"g": g.to_json(), "order": args.order}
    try:
        f = birkhoff(g, order=args.order)
    except OutsideBigCellError as exc:
        pivot = exc.pivot
        pivot_json = pivot.to_json() if hasattr(pivot, "to_json") else str(pivot)
        return inputs, {"in_big_cell": False, "index": exc.index, "pivot": pivot_json}, True
    out = f.to_json()
    out["in_big_cell"] = True
    return inputs, out, f.recompose() == g


def _cmd_cartan(args):
    g = _load_element(args)
    f = cartan(g, args.tol)
    return {"g": g.to_json()}, f.to_json(), f.verified


def _cmd_polar(args):
    g = _load_element(args)
    f = polar(g, args.tol)
    out = f.to_json()
    out["positive_definite"] = f.positive_definite
    return {"g": g.to_json()}, out, f.verified


def _cmd_kak(args):
    g = _load_element(args)
    w = kak_word(g, args.tol)
    return {"g": g.to_json()}, w.to_json(), w.verified


def _cmd_diag_test(args):
    g = _load_element(args)
    cert = diag_test(g)
    return {"g": g.to_json()}, cert.to_json(), True


def _cmd_sl2_sqrt(args):
    v = _load_element(args)
    cert = sl2_sqrt(v)
    ok = cert.root is None or mul(cert.root, cert.root) == v
    return {"v": v.to_json()}, cert.to_json(), ok


def _cmd_nucleus(args):
    obj = _read_json(args.input)
    ring = _ring_from_flags(args)
    try:
        if isinstance(obj, dict) and "v" in obj:
            v = GroupElement.from_json(obj["v"], ring)
            g = GroupElement.from_json(obj["g"], ring) if "g" in obj else None
        else:
            v, g = GroupElement.from_json(obj, ring), None
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad nucleus input: {exc}") from None
    cert = nucleus_member(v, g, depth=args.depth, tol=max(args.tol, 1e-8))
    inputs = {"v": v.to_json(), "depth": args.depth}
    if g is not None:
        inputs["g"] = g.to_json()
    return inputs, cert.to_json(), cert.verified


def _cmd_hole(args):
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    w = hole_witness(args.n)
    out = w.to_json()
    out["charpoly_text"] = str(w.charpoly)
    out["diag_test"] = diag_test(w.v).to_json()
    return {"n": args.n}, out, w.matches


def _cmd_coxeter(args):
    gcm = _load_gcm(args.gcm)
    inputs = {"gcm": gcm.to_json(), "action": args.action}
    if args.action == "find":
        w = find_straight_candidate(gcm, args.depth, args.nmax)
        inputs["depth"] = args.depth
        if w is None:
            return inputs, {"found": False}, True
        prof = is_straight(w, args.nmax)
        return inputs, {"found": True, **prof.to_json()}, prof.straight
    word = _parse_word(args.word, gcm.n)
    inputs["word"] = word
    w = WeylElement.from_word(gcm, word)
    if args.action == "length":
        ell, _ = w.descent()
        reduced = w.reduced_word()
        check = WeylElement.from_word(gcm, reduced) == w
        return inputs, {"length": ell, "reduced_word": reduced, "is_reduced": len(word) == ell}, check
    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    inputs["nmax"] = args.nmax
    prof = is_straight(w, args.nmax)
    return inputs, prof.to_json(), True


def _cmd_cover(args):
    gcm = _load_gcm(args.gcm)
    b = kuk_bound(gcm)
    return {"gcm": gcm.to_json()}, b.to_json(), b.covering.r <= gcm.n


def _cmd_suite(args):
    if not args.lemmas:
        raise UsageError("suite needs --lemmas")
    results = run_lemmas(args.seed)
    return {"lemmas": True}, {"checks": results}, all(r["passed"] for r in results)


COMMANDS = {
    "tau": _cmd_tau,
    "member": _cmd_member,
    "iwasawa": _cmd_iwasawa,
    "birkhoff": _cmd_birkhoff,
    "cartan": _cmd_cartan,
    "polar": _cmd_polar,
    "kak": _cmd_kak,
    "diag-test": _cmd_diag_test,
    "sl2-sqrt": _cmd_sl2_sqrt,
    "nucleus": _cmd_nucleus,
    "hole": _cmd_hole,
    "coxeter": _cmd_coxeter,
    "cover": _cmd_cover,
    "suite": _cmd_suite,
}


def _emit(report, path):
    text = json.dumps(report, indent=2, ensure_ascii=False)
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def run(argv=None):
    """Parse ``argv``, dispatch, print the report; returns the exit status."""
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        inputs, result, verified = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"kmdecomp: error: {exc}", file=sys.stderr)
        return 1
    except (InternalError, ConvergenceFailureError) as exc:
        print(f"kmdecomp: verification failed: {exc}", file=sys.stderr)
        return 2
    except KMDecompError as exc:
        print(f"kmdecomp: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = {
        "subcommand": args.command,
        "inputs": inputs,
        "result": result,
        "verified": bool(verified),
        "seed": args.seed,
        "timing_s": round(time.perf_counter() - start, 6),
    }
    try:
        _emit(report, args.out)
    except OSError as exc:
        print(f"kmdecomp: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return 1
    return 0 if verified else 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
