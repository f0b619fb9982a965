"""Command-line front end with JSON output.

Exit codes: 0 for success or a verified claim, 1 for a falsified claim or
invalid certificate, 2 for usage errors or malformed input.  Output is
canonical JSON (sorted keys), so identical flags and seed give identical
bytes; the seed is echoed in every payload that could involve randomness.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .diagrams import compose_blob, compose_tl, diagram_from_json, diagram_to_json, \
    enumerate_blob, enumerate_tl, generator_u
from .faithful import DEFAULT_SEED, certify_rho0, triangularity_report, \
    verify_blob_representation, verify_r_composition, verify_tl_faithful
from .rings import BlobParams, CycloLaurent, dumps_canonical, quantum_integer
from .tensorrep import Rho0Config, matrix_to_json, r_matrix, rho0
from .walks import WalkPair, enumerate_pairs, hasse_edges, linear_extension, \
    pair_word, walk_from_string
from .words import eval_word, format_word, verify_presentation


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tlblob",
        description="Exact diagram-algebra workbench: enumeration, composition,"
                    " tensor matrices and faithfulness certification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="seed for randomized screens (default %(default)s)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for exhaustive sweeps")
        return p

    p = common(sub.add_parser("enumerate", help="list diagrams"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="southern node count (default n)")
    p.add_argument("--blob", action="store_true", help="blob diagrams on (n,n)")

    p = common(sub.add_parser("compose", help="compose two diagram JSON files"))
    p.add_argument("left")
    p.add_argument("right")

    p = common(sub.add_parser("rmatrix", help="tensor-space matrix of a diagram"))
    p.add_argument("--file", help="diagram JSON file")
    p.add_argument("--n", type=int, help="ambient size for --u")
    p.add_argument("--u", type=int, help="generator index instead of a file")
    p.add_argument("--convention", choices=("standard", "shifted"),
                   default="standard")

    p = common(sub.add_parser("walkword", help="generator word of a walk pair"))
    p.add_argument("--a", required=True, help="left walk, e.g. 112")
    p.add_argument("--b", required=True, help="right walk, e.g. 121")

    p = common(sub.add_parser("lattice", help="walk-pair order as JSON edges"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("verify-tl",
                              help="triangularity, composition identity and rank"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("verify-blob",
                              help="structure constants of the blob tensor rep"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="weight exponent (default 1)")

    p = common(sub.add_parser("certify-rho0",
                              help="mirror-mask and rank certificate"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="weight exponent (default 1)")
    return parser


def _load_diagram(path):
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    # accept the output of `compose` directly
    if isinstance(obj, dict) and "pairs" not in obj and "diagram" in obj:
        obj = obj["diagram"]
    try:
        return diagram_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{path} does not hold a diagram: {exc}") from exc


def _cmd_enumerate(args):
    if args.blob:
        if args.m is not None and args.m != args.n:
            raise ValueError("blob diagrams need m = n")
        diagrams = enumerate_blob(args.n)
    else:
        diagrams = enumerate_tl(args.n, args.n if args.m is None else args.m)
    payload = {
        "count": len(diagrams),
        "diagrams": [diagram_to_json(d) for d in diagrams],
    }
    return payload, True


def _cmd_compose(args):
    left = _load_diagram(args.left)
    right = _load_diagram(args.right)
    if hasattr(left, "blobbed") or hasattr(right, "blobbed"):
        res, _ = compose_blob(left, right)
    else:
        res = compose_tl(left, right)
    payload = {
        "diagram": diagram_to_json(res.diagram),
        "plain_loops": res.plain_loops,
        "blob_loops": res.blob_loops,
        "blob_merges": res.blob_merges,
    }
    return payload, True


def _cmd_rmatrix(args):
    if args.file:
        diagram = _load_diagram(args.file)
    elif args.u is not None and args.n is not None:
        diagram = generator_u(args.u, args.n, args.convention)
    else:
        raise ValueError("rmatrix needs --file or both --n and --u")
    return {"matrix": matrix_to_json(r_matrix(diagram))}, True


def _cmd_walkword(args):
    pair = WalkPair(walk_from_string(args.a), walk_from_string(args.b))
    word = pair_word(pair)
    ev = eval_word(word)
    payload = {
        "word": format_word(word),
        "diagram": diagram_to_json(ev.tl_diagram),
        "loop_free": ev.loop_free,
    }
    return payload, True


def _cmd_lattice(args):
    pairs = linear_extension(enumerate_pairs(args.n))
    index = {p: i for i, p in enumerate(pairs)}
    edges = sorted((index[p], index[q]) for p, q in hasse_edges(pairs))
    payload = {
        "pairs": [f"{p.a!r}|{p.b!r}" for p in pairs],
        "edges": [list(e) for e in edges],
    }
    return payload, True


def _cmd_verify_tl(args):
    tri = triangularity_report(args.n, jobs=args.jobs)
    comp_failures = verify_r_composition(args.n, jobs=args.jobs)
    cert = verify_tl_faithful(args.n, seed=args.seed)
    ok = tri.ok and not comp_failures and cert.valid
    payload = {
        "n": args.n,
        "seed": args.seed,
        "triangularity": {
            "ok": tri.ok,
            "failures": len(tri.failures),
            "nonwalk_entries": len(tri.nonwalk_entries),
        },
        "composition_identity": {
            "ok": not comp_failures,
            "failures": len(comp_failures),
        },
        "certificate": cert.to_json(),
    }
    return payload, ok


def _cmd_verify_blob(args):
    rep = rho0(Rho0Config(args.n, args.m))
    params = BlobParams.integral_form(args.m, cyclo=True)
    report = verify_blob_representation(rep.letter_images(), args.n, params)
    delta = CycloLaurent.from_laurent(quantum_integer(2))
    presentation = verify_presentation(rep.letter_images(), args.n, delta,
                                       params.sign_flipped())
    payload = {
        "n": args.n,
        "m": args.m,
        "seed": args.seed,
        "structure_constants": report.to_json(),
        "relations_ok_after_sign_flip": presentation.ok,
    }
    return payload, report.ok


def _cmd_certify_rho0(args):
    cert = certify_rho0(args.n, args.m, seed=args.seed)
    payload = {
        "n": args.n,
        "m": args.m,
        "seed": args.seed,
        "certificate": cert.to_json(),
    }
    return payload, cert.valid


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "compose": _cmd_compose,
    "rmatrix": _cmd_rmatrix,
    "walkword": _cmd_walkword,
    "lattice": _cmd_lattice,
    "verify-tl": _cmd_verify_tl,
    "verify-blob": _cmd_verify_blob,
    "certify-rho0": _cmd_certify_rho0,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else int(exc.code)
    try:
        payload, ok = _COMMANDS[args.command](args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dumps_canonical(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
