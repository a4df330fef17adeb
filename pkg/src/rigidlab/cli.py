"""Command-line front end.

Subcommands: roots, sequences, rigid, hom, cluster, mutate, verify.
Exit codes: 0 success, 1 a verification failed, 2 bad input. Output is
assembled completely before anything is written, JSON uses sorted keys and
compact separators, and TSV rows are sorted.
"""

import argparse
from dataclasses import dataclass, field
import json
import sys

from . import clustercat as cc
from .repcat import TooLargeError, hom_ext_dims, rep_from_json, rep_to_json, rigid_indec_classify
from .roots import Quiver, euler_form, kronecker_sequences, positive_real_roots
from .theoremlab import ALL_CAMPAIGNS, RunConfig, all_passed, run_all


class InputError(Exception):
    """Bad flags or input files; reported with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


@dataclass
class Config:
    command: str
    m: int = None
    bound: int = 40
    window: int = cc.DEFAULT_WINDOW
    trials: int = 8
    seed: int = 0
    format: str = "json"
    input_paths: list = field(default_factory=list)
    output_path: str = None

    def __post_init__(self):
        if self.bound < 1:
            raise InputError("--bound must be at least 1")
        if self.trials < 1:
            raise InputError("--trials must be at least 1")
        if self.format not in ("json", "tsv"):
            raise InputError("--format must be json or tsv")


def build_parser():
    p = _Parser(prog="rigidlab", description="Rigid objects of Kronecker quivers and their cluster categories")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_m=True):
        if need_m:
            sp.add_argument("--m", type=int, required=True, help="Kronecker degree")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("roots", help="positive real roots with bounded entries")
    sp.add_argument("--m", type=int, help="Kronecker degree (or give --in)")
    sp.add_argument("--in", dest="inputs", action="append", default=[], help="quiver JSON file")
    sp.add_argument("--bound", type=int, default=10)
    common(sp, need_m=False)

    sp = sub.add_parser("sequences", help="preprojective and preinjective dimension vectors")
    sp.add_argument("--count", type=int, default=5)
    common(sp)

    sp = sub.add_parser("rigid", help="classify rigid indecomposables by sampling")
    sp.add_argument("--bound", type=int, default=40)
    sp.add_argument("--trials", type=int, default=8)
    common(sp)

    sp = sub.add_parser("hom", help="Hom and Ext^1 dimensions of two representation files")
    sp.add_argument("--in", dest="inputs", action="append", default=[], required=True)
    sp.add_argument("--dump", action="store_true", help="also emit the parsed representations")
    common(sp, need_m=False)

    sp = sub.add_parser("cluster", help="window Hom table and 2-rigidity map")
    sp.add_argument("--window", type=int, default=3)
    common(sp)

    sp = sub.add_parser("mutate", help="walk along mutations of C_i = {M_i, M_i+1}")
    sp.add_argument("--start", type=int, default=0)
    sp.add_argument("--steps", type=int, default=3)
    sp.add_argument("--direction", choices=("up", "down"), default="up")
    sp.add_argument("--window", type=int, default=cc.DEFAULT_WINDOW)
    common(sp)

    sp = sub.add_parser("verify", help="run verification campaigns")
    sp.add_argument("--all", action="store_true", help="run every campaign")
    sp.add_argument("--claim", action="append", default=[], choices=ALL_CAMPAIGNS)
    sp.add_argument("--bound", type=int, default=40)
    sp.add_argument("--window", type=int, default=cc.DEFAULT_WINDOW)
    sp.add_argument("--trials", type=int, default=8)
    common(sp, need_m=False)
    return p


# ---------------------------------------------------------------- formatting

def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def vec(d):
    return "(" + ",".join(str(x) for x in d) + ")"


def tsv(rows):
    lines = sorted("\t".join(str(x) for x in r) for r in rows)
    return "".join(line + "\n" for line in lines)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def _need_kronecker(m):
    if m is None or m < 2:
        raise InputError("--m must be at least 2")


# ---------------------------------------------------------------- commands

def cmd_roots(args):
    if args.inputs:
        try:
            Q = Quiver.from_json(_read_json(args.inputs[0]))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    elif args.m is not None:
        if args.m < 0:
            raise InputError("--m must be non-negative")
        Q = Quiver.kronecker(args.m)
    else:
        raise InputError("roots needs --m or --in")
    if args.bound < 1:
        raise InputError("--bound must be at least 1")
    roots = positive_real_roots(Q, args.bound)
    if args.format == "tsv":
        return tsv(roots), 0
    return dumps({"bound": args.bound, "quiver": Q.to_json(), "roots": roots}) + "\n", 0


def cmd_sequences(args):
    _need_kronecker(args.m)
    if args.count < 2:
        raise InputError("--count must be at least 2")
    P, I = kronecker_sequences(args.m, args.count)
    if args.format == "tsv":
        return tsv([("P", " ".join(vec(d) for d in P)), ("I", " ".join(vec(d) for d in I))]), 0
    return dumps({"m": args.m, "P": P, "I": I}) + "\n", 0


def cmd_rigid(args):
    _need_kronecker(args.m)
    Config("rigid", m=args.m, bound=args.bound, trials=args.trials, seed=args.seed,
           format=args.format)
    found = rigid_indec_classify(args.m, args.bound, trials=args.trials, seed=args.seed)
    if args.format == "tsv":
        return tsv(found), 0
    return dumps({"bound": args.bound, "m": args.m, "rigid": found}) + "\n", 0


def cmd_hom(args):
    if len(args.inputs) != 2:
        raise InputError("hom needs exactly two --in files")
    try:
        X, Y = (rep_from_json(_read_json(p)) for p in args.inputs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if X.quiver != Y.quiver:
        raise InputError("the two representations live over different quivers")
    try:
        hom, ext = hom_ext_dims(X, Y)
    except TooLargeError as exc:
        raise InputError(str(exc)) from exc
    out = {"dims": [X.dims, Y.dims], "ext1": ext, "hom": hom,
           "euler": euler_form(X.quiver, X.dims, Y.dims)}
    if args.dump:
        out["reps"] = [rep_to_json(X), rep_to_json(Y)]
    if args.format == "tsv":
        rows = [("hom", hom), ("ext1", ext), ("euler", out["euler"])]
        return tsv(rows), 0
    return dumps(out) + "\n", 0


def cmd_cluster(args):
    _need_kronecker(args.m)
    if args.window < 1:
        raise InputError("--window must be at least 1")
    m, w = args.m, args.window
    objs = [cc.Transjective(m, j) for j in range(-w, w + 1)]
    table = [[A.name, B.name, cc.cluster_hom_dim(A, B), cc.cluster_hom_dim(A, B, 1)]
             for A in objs for B in objs]
    regular = cc.window_objects(m, w)[len(objs):]
    rigid = {A.name: cc.is_2_rigid([A]) for A in objs}
    rigid_regular = sorted(A.name for A in regular if cc.is_2_rigid([A]))
    if args.format == "tsv":
        return tsv([tuple(r) for r in table]), 0
    return dumps({"m": m, "window": w, "hom": table, "rigid": rigid,
                  "regular_objects": len(regular), "rigid_regular": rigid_regular}) + "\n", 0


def cmd_mutate(args):
    _need_kronecker(args.m)
    if args.steps < 0 or args.window < 1:
        raise InputError("--steps must be non-negative and --window at least 1")
    m = args.m
    T = cc.chamber(m, args.start)
    walk = [T.names()]
    status = 0
    error = None
    for _ in range(args.steps):
        idx = sorted(A.index for A in T)
        X = cc.Transjective(m, idx[0] if args.direction == "up" else idx[1])
        try:
            T = cc.mutate(T, X, args.window)
        except (cc.WindowTooSmallError, ValueError) as exc:
            error = str(exc)
            status = 1
            break
        walk.append(T.names())
    if args.format == "tsv":
        return tsv([(i, " ".join(names)) for i, names in enumerate(walk)]), status
    out = {"m": m, "walk": walk, "window": args.window}
    if error:
        out["error"] = error
    return dumps(out) + "\n", status


def cmd_verify(args):
    campaigns = ALL_CAMPAIGNS if args.all else tuple(args.claim)
    if not campaigns:
        raise InputError("verify needs --all or at least one --claim")
    Config("verify", bound=args.bound, window=args.window, trials=args.trials,
           seed=args.seed, format=args.format)
    if args.window < 1:
        raise InputError("--window must be at least 1")
    config = RunConfig(campaigns=campaigns, seed=args.seed, bound=args.bound,
                       window=args.window, trials=args.trials)
    reports = run_all(config)
    status = 0 if all_passed(reports) else 1
    if args.format == "tsv":
        rows = [(r.claim, r.status, len(r.checks), len(r.counterexamples)) for r in reports]
        return tsv(rows), status
    return "".join(r.to_json() + "\n" for r in reports), status


COMMANDS = {"roots": cmd_roots, "sequences": cmd_sequences, "rigid": cmd_rigid, "hom": cmd_hom,
            "cluster": cmd_cluster, "mutate": cmd_mutate, "verify": cmd_verify}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"rigidlab: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"rigidlab: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status
