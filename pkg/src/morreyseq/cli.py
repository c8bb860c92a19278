"""Command line front end.

Exit codes: 0 computed, 1 domain error (e.g. a trivial space), 2 usage or
input-format error.  With ``--json`` a single JSON report goes to stdout:
``{"command", "inputs_digest", "result", "summary"}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import embeddings, finite_dim, witnesses
from .errors import MorreyError, TrivialSpace
from .norms import norm_mps
from .serialize import digest, dumps, load_sequence, load_space, write_json
from .weights import SpaceParams, Weight, classify_space, is_gp, is_nontrivial, r_phi, regularize

#: Used by ``witness`` when no ``--space`` is given.
REFERENCE_SPACE = SpaceParams(Weight.power(1, 2.0), 1.0)


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _floats(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="morreyseq", description="Morrey sequence spaces: norms, embeddings, witnesses.", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[common], help="Morrey norm of a finite sequence")
    p.add_argument("--space", required=True)
    p.add_argument("--seq", required=True)

    p = sub.add_parser("check", parents=[common], help="weight class tests")
    p.add_argument("--space", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    for flag in ("--gp", "--nontrivial", "--classify", "--rphi", "--regularize"):
        mode.add_argument(flag, action="store_true")
    p.add_argument("--out", help="output file for --regularize")

    p = sub.add_parser("embed", parents=[common], help="continuity and strict singularity of the embedding")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--strict-singularity", action="store_true")

    p = sub.add_parser("opnorm", parents=[common], help="norm of the finite-dimensional identity")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--search", type=int, default=0, help="random-search trials for p1 < p2")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("witness", parents=[common], help="generate a witness sequence")
    p.add_argument(
        "--kind",
        required=True,
        choices=["char", "c0", "spike", "lambda-E", "proper-subspace", "linf-copy", "ss-demo", "embedding-failure"],
    )
    p.add_argument("--space", help="space file (default: d=1, phi(t)=t^(1/2), p=1)")
    p.add_argument("--to", dest="dst", help="target space for embedding-failure")
    p.add_argument("--k0", type=int, default=0)
    p.add_argument("--m0", type=_ints)
    p.add_argument("--L", type=int, default=4)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--mu", type=_floats)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--subset", type=_ints, default=[])
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; generators are deterministic")
    p.add_argument("--out", help="write the sequence file here")
    return parser


def _cmd_norm(args):
    space = load_space(args.space)
    seq = load_sequence(args.seq)
    res = norm_mps(seq, space.weight, space.p)
    if res.divergent:
        raise TrivialSpace("tail exponent exceeds d/p: the space is {0}")
    summary = f"||seq|| = {res.value!r}" + (f" attained at {res.cube}" if res.cube else "")
    return {"space": args.space, "seq": args.seq}, res.to_dict(), summary


def _cmd_check(args):
    space = load_space(args.space)
    w, p = space.weight, space.p
    if args.gp:
        ok = is_gp(w, p)
        return {"space": args.space}, {"gp": ok}, f"in G_p: {ok}"
    if args.nontrivial:
        ok = is_nontrivial(w, p)
        return {"space": args.space}, {"nontrivial": ok}, f"nontrivial: {ok}"
    if args.classify:
        rep = classify_space(w, p)
        return {"space": args.space}, rep.to_dict(), (
            f"l_inf: {rep.equals_linf}, l_p: {rep.equals_lp}, c_0: {rep.comparable_with_c0}"
        )
    if args.rphi:
        r = r_phi(w)
        return {"space": args.space}, {"r_phi": r}, f"r_phi = {r!r}"
    if not args.out:
        raise UsageError("--regularize needs --out")
    reg = SpaceParams(regularize(w, p), p)
    write_json(args.out, reg.to_dict())
    return {"space": args.space}, {"regularized": reg.to_dict(), "out": args.out}, f"wrote {args.out}"


def _cmd_embed(args):
    a, b = load_space(args.src), load_space(args.dst)
    verdict = embeddings.is_continuous(a.weight, a.p, b.weight, b.p)
    result = verdict.to_dict()
    summary = f"continuous: {verdict.continuous}"
    if not verdict.continuous:
        result["witness"] = f"morreyseq witness --kind embedding-failure --space {args.src} --to {args.dst} --L 10"
    if args.strict_singularity:
        ss = embeddings.is_strictly_singular(a.weight, a.p, b.weight, b.p)
        result["strict_singularity"] = ss.to_dict()
        summary += f"; {ss.kind} ({ss.reason})"
    return {"from": args.src, "to": args.dst}, result, summary


def _cmd_opnorm(args):
    a, b = load_space(args.src), load_space(args.dst)
    if args.level < 0:
        raise UsageError("--level must be non-negative")
    res = finite_dim.opnorm_id(a.weight, a.p, b.weight, b.p, args.level, search_trials=args.search, seed=args.seed)
    if res.exact is not None:
        summary = f"||id_{args.level}|| = {res.exact!r}"
    else:
        summary = f"{res.lower!r} <= ||id_{args.level}|| <= {res.upper!r}"
    return {"from": args.src, "to": args.dst}, res.to_dict(), summary


def _cmd_witness(args):
    space = load_space(args.space) if args.space else REFERENCE_SPACE
    w, p = space.weight, space.p
    inputs = {"space": args.space} if args.space else {}
    kind = args.kind
    if kind == "char":
        bundles = [witnesses.char_sequence(w, p, args.k0, args.m0)]
    elif kind == "c0":
        bundles = [witnesses.c0_counterexample(w, p, args.L)]
    elif kind == "spike":
        bundles = [witnesses.spike_sequence(w, p, args.L)]
    elif kind == "lambda-E":
        bundles = [witnesses.lambda_E(w, p, args.subset, args.L)]
    elif kind == "proper-subspace":
        bundles = [witnesses.proper_subspace_witness(w, p, args.blocks)]
    elif kind == "linf-copy":
        if args.mu is None:
            raise UsageError("--kind linf-copy needs --mu")
        bundles = [witnesses.linf_copy(w, p, args.mu)]
    elif kind == "ss-demo":
        bundles = [witnesses.ss_demo(w, p, args.n, args.eps)]
    else:
        if not args.dst:
            raise UsageError("--kind embedding-failure needs --to")
        target = load_space(args.dst)
        inputs["to"] = args.dst
        bundles = witnesses.embedding_failure_witness(w, p, target.weight, target.p, args.L)
        w, p = target.weight, target.p

    bundle = bundles[-1]
    checks = witnesses.verify(bundle, w, p)
    value = norm_mps(bundle.sequence, w, p).value
    result = bundle.to_dict()
    result["mps_norm"] = value
    result["verified"] = checks
    if args.out:
        write_json(args.out, bundle.sequence.to_dict())
        result["out"] = args.out
    ok = all(checks.values())
    summary = f"{kind}: {len(bundle.sequence)} entries, norm {value!r}, certificates {'hold' if ok else 'FAIL'}"
    return inputs, result, summary


COMMANDS = {
    "norm": _cmd_norm,
    "check": _cmd_check,
    "embed": _cmd_embed,
    "opnorm": _cmd_opnorm,
    "witness": _cmd_witness,
}


def _emit_error(as_json: bool, code: str, message: str) -> None:
    if as_json:
        print(dumps({"error": code, "message": message}))
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        inputs, result, summary = COMMANDS[args.command](args)
        report = {
            "command": args.command,
            "inputs_digest": digest({k: v for k, v in inputs.items() if v}),
            "result": result,
            "summary": summary,
        }
    except MorreyError as exc:
        _emit_error(as_json, exc.code, str(exc))
        return 1
    except UsageError as exc:
        _emit_error(as_json, "UsageError", str(exc))
        return 2
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        _emit_error(as_json, "InputError", f"{type(exc).__name__}: {exc}")
        return 2
    if as_json:
        print(dumps(report))
    else:
        print(summary)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
