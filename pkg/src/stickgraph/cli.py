"""``stick`` command line.  Exit codes: 0 accepted/valid, 1 rejected/invalid, 2 usage or IO error."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import closure as cl
from . import cso, genbench, minlen, oracle
from .model import GroundOrder, InstanceError, OrderError, parse_instance, serialize_instance
from .representation import (RepresentationError, build_representation, render_svg, total_length,
                             verify_representation)


class UsageError(Exception):
    pass


class Output:
    def __init__(self, args):
        self.json = args.json
        self.quiet = args.quiet

    def result(self, text: str, data: dict):
        if self.json:
            print(json.dumps(data, sort_keys=True))
        elif not self.quiet and text:
            print(text)

    def diag(self, text: str):
        print(text, file=sys.stderr)


def _load(path: str, strip: bool = False):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_instance(text, strip_isolated=strip)
    except InstanceError as e:
        raise UsageError(f"{path}: {e}") from None


def _order(inst, text: str) -> GroundOrder:
    try:
        order = GroundOrder.parse(text)
        order.validate(inst)
    except OrderError as e:
        raise UsageError(f"bad order: {e}") from None
    return order


def _write(path: str, text: str):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


def cmd_recognize(args, out: Output) -> int:
    inst = _load(args.file, args.strip_isolated)
    res = cso.run_cso(inst, trace=args.trace)
    notes = list(inst.notes)
    for n in notes:
        out.diag(f"note: {n}")
    if args.trace and not args.json:
        for row in res.dag.trace:
            print(row, file=sys.stderr if args.quiet else sys.stdout)
    trace = [str(r) for r in res.dag.trace] if args.trace else None
    if isinstance(res, cso.Rejection):
        c = res.certificate
        out.result("", {"accepted": False, "certificate": {"i": c.i, "b_x": c.b_x, "b_y": c.b_y},
                        "notes": notes, "trace": trace})
        if args.certificate or not args.json:
            out.diag(c.render())
        return 1
    if args.order_out:
        _write(args.order_out, f"{res.order}\n")
    out.result(str(res.order), {"accepted": True, "order": str(res.order), "notes": notes, "trace": trace})
    return 0


def cmd_closure(args, out: Output) -> int:
    inst = _load(args.file, args.strip_isolated)
    rel = cl.forcing_closure(inst)
    if isinstance(rel, cl.CycleCertificate):
        out.result("", {"acyclic": False, "cycle": list(rel.cycle)})
        out.diag(f"CYCLE {rel.render()}")
        return 1
    pairs = sorted(rel.b_pairs())
    weak = sorted(cl.weak_pairs(rel))
    m = cl.m_values(rel)
    text = "\n".join([
        "forced: " + " ".join(f"b{h}<b{j}" for h, j in pairs),
        "weak: " + " ".join(f"b{h}<b{j}" for h, j in weak),
        "m: " + " ".join(f"b{j}={v}" for j, v in m.items()),
    ])
    out.result(text, {"acyclic": True, "forced": pairs, "weak": weak, "m": {str(j): v for j, v in m.items()}})
    return 0


def cmd_verify(args, out: Output) -> int:
    inst = _load(args.file)
    order = _order(inst, args.order)
    try:
        rep = build_representation(inst, order)
    except RepresentationError as e:
        out.result("", {"valid": False, "violation": str(e)})
        out.diag(f"INVALID {e}")
        return 1
    v = verify_representation(inst, rep)
    if v is not None:
        out.result("", {"valid": False, "violation": v.render(), "i": v.i, "j": v.j, "kind": v.kind})
        out.diag(f"INVALID {v.render()}")
        return 1
    out.result(f"VALID length {total_length(rep)}", {"valid": True, "length": total_length(rep)})
    return 0


def cmd_render(args, out: Output) -> int:
    inst = _load(args.file)
    if args.order:
        order = _order(inst, args.order)
    else:
        res = cso.run_cso(inst)
        if isinstance(res, cso.Rejection):
            out.diag(res.certificate.render())
            return 1
        order = res.order
    try:
        rep = build_representation(inst, order)
    except RepresentationError as e:
        raise UsageError(str(e)) from None
    svg = render_svg(rep)
    if args.output:
        _write(args.output, svg)
        out.result(f"wrote {args.output}", {"output": args.output, "length": total_length(rep)})
    else:
        sys.stdout.write(svg)
    return 0


def _rep_text(rep) -> str:
    return (f"order: {rep.order}\n"
            f"a_len: {' '.join(map(str, rep.a_len))}\n"
            f"b_len: {' '.join(map(str, rep.b_len))}\n"
            f"length: {total_length(rep)}\n")


def cmd_minlen(args, out: Output) -> int:
    inst = _load(args.file)
    try:
        if args.mode == "ab":
            if not args.b_order:
                raise UsageError("--mode ab needs --b-order")
            b_order = [int(t.lstrip("b")) for t in args.b_order.replace(",", " ").split()]
            rep = minlen.ab_minlen(inst, b_order)
        elif args.mode == "noverlap":
            rep = minlen.minlen_noverlap(inst)
        elif args.mode == "heuristic":
            rep = minlen.local_search_minlen(inst)
        else:
            rep = minlen.brute_minlen(inst, force=args.force)
    except minlen.NotAStickError as e:
        out.result("", {"ok": False, "error": str(e)})
        out.diag(str(e))
        return 1
    except minlen.PatternError as e:
        out.result("", {"ok": False, "error": str(e)})
        out.diag(str(e))
        return 1
    except (minlen.NotNOverlapError, oracle.GuardError, OrderError, ValueError) as e:
        raise UsageError(str(e)) from None
    if args.output:
        _write(args.output, _rep_text(rep))
    out.result(_rep_text(rep).rstrip(), {"ok": True, "mode": args.mode, "order": str(rep.order),
                                        "a_len": list(rep.a_len), "b_len": list(rep.b_len),
                                        "length": total_length(rep)})
    return 0


def cmd_oracle(args, out: Output) -> int:
    inst = _load(args.file)
    try:
        if args.what == "recognize":
            perm = oracle.brute_recognize(inst, force=args.force)
            if perm is None:
                out.result("", {"accepted": False})
                out.diag("no valid B order")
                return 1
            out.result(" ".join(f"b{j}" for j in perm), {"accepted": True, "b_order": list(perm)})
            return 0
        orders = oracle.enumerate_valid_orders(inst, force=args.force)
    except oracle.GuardError as e:
        raise UsageError(f"{e} (use --force)") from None
    out.result("\n".join(map(str, orders)), {"count": len(orders), "orders": [str(o) for o in orders]})
    return 0 if orders else 1


def cmd_gen(args, out: Output) -> int:
    seed = args.seed if args.seed is not None else 0
    if args.random is not None:
        try:
            inst = genbench.gen_random_bipartite(args.na, args.nb, args.random, seed)
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        inst = genbench.gen_stick_instance(args.na, args.nb, seed)
    text = serialize_instance(inst)
    if args.output:
        _write(args.output, text)
        out.result(f"wrote {args.output}", {"output": args.output, "n_a": inst.n_a, "n_b": inst.n_b,
                                            "edges": inst.n_edges})
    elif args.json:
        out.result("", {"instance": text})
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args, out: Output) -> int:
    try:
        sizes = [int(float(s)) for s in args.sizes.split(",")]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    seed = args.seed if args.seed is not None else 0
    cap = None if args.closure_max_edges < 0 else args.closure_max_edges
    try:
        rep = genbench.bench_scaling(sizes, args.reps, seed, closure_max_edges=cap)
    except ValueError as e:
        raise UsageError(str(e)) from None
    csv = rep.to_csv()
    if args.csv:
        _write(args.csv, csv)
    for s in rep.dropped:
        out.diag(f"size {s} dropped: below timer resolution")
    text = csv.rstrip() + ("\nratios: " + " ".join(f"{r:.2f}" for r in rep.ratios) if rep.ratios else "")
    out.result(text, {"rows": [r.__dict__ for r in rep.rows], "ratios": rep.ratios, "dropped": rep.dropped})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress non-essential output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")

    p = argparse.ArgumentParser(prog="stick", description="A-Stick graph recognition and representation.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", parents=[common], help="run CSO and print a canonical order")
    s.add_argument("file")
    s.add_argument("--order-out")
    s.add_argument("--certificate", action="store_true", help="print the rejection certificate on stderr")
    s.add_argument("--trace", action="store_true", help="print DAG snapshots after each sub-step")
    s.add_argument("--strip-isolated", action="store_true")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("closure", parents=[common], help="forced pairs, m values and weak pairs")
    s.add_argument("file")
    s.add_argument("--strip-isolated", action="store_true")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("verify", parents=[common], help="check the representation of a ground order")
    s.add_argument("file")
    s.add_argument("--order", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="SVG of a representation")
    s.add_argument("file")
    s.add_argument("--order", help="ground order; default: the canonical one")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("minlen", parents=[common], help="minimum-length representations")
    s.add_argument("file")
    s.add_argument("--mode", choices=["ab", "noverlap", "heuristic", "brute"], default="heuristic")
    s.add_argument("--b-order")
    s.add_argument("--force", action="store_true", help="lift the brute-force size guard")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_minlen)

    s = sub.add_parser("oracle", parents=[common], help="exhaustive ground truth")
    s.add_argument("file")
    s.add_argument("what", choices=["recognize", "enumerate"])
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", parents=[common], help="generate an instance")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--stick", action="store_true")
    g.add_argument("--random", type=float, metavar="P")
    s.add_argument("--na", type=int, required=True)
    s.add_argument("--nb", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", parents=[common], help="scaling benchmark")
    s.add_argument("--sizes", default="1e4,2e4,4e4,8e4", help="comma-separated edge counts")
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--csv")
    s.add_argument("--closure-max-edges", type=int, default=20_000, help="-1 times closure at every size")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for name, default in (("json", False), ("quiet", False), ("seed", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(levelname)s: %(message)s")
    out = Output(args)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"stick: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
