"""Command-line front end with deterministic JSON output.

Every command prints an envelope ``{"status", "payload", "diagnostics"}``
to stdout and exits 0 on success, 1 on usage errors, 2 on domain errors.
``--out`` writes the command's primary document (bias set, state, ...) to a
file that other commands accept as input. Outputs are byte-identical for
identical flag sets.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from . import bounds as bounds_mod
from . import coherent as coherent_mod
from . import generator as gen_mod
from . import qstate
from .bias import BiasSet, SearchConfig, load_bias_set, search
from .errors import QHashError, RangeError
from .field import make_field
from .jsonio import dump_json, dumps_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

DEFAULT_DOMAIN_CAP = 100_000


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: List[str] = field(default_factory=list)
    out_doc: Optional[dict] = None  # what --out writes; defaults to payload

    def envelope(self) -> dict:
        return {
            "status": self.status,
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        }


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the CLI contract wants 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _csv_ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise RangeError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_alpha(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise RangeError(f"expected alpha as RE or RE,IM, got {text!r}")


def _load_set(args) -> bias_mod.BiasSet:
    if getattr(args, "set", None):
        return load_bias_set(args.set)
    if getattr(args, "q", None) is not None and getattr(args, "elements", None):
        return BiasSet(make_field(args.q), _csv_ints(args.elements))
    raise RangeError("provide --set FILE, or --q with --elements")


def cmd_search(args) -> CommandResult:
    cfg = SearchConfig(
        q=args.q, size=args.size, mode=args.mode, budget=args.budget, seed=args.seed
    )
    bset = search(cfg, workers=args.workers)
    doc = bset.to_json()
    payload = dict(doc)
    payload["mode"] = args.mode
    payload["seed"] = args.seed
    payload["budget"] = args.budget
    return CommandResult("ok", payload, [], out_doc=doc)


def cmd_bias(args) -> CommandResult:
    bset = _load_set(args)
    payload = bset.to_json()
    diagnostics = []
    if args.delta is not None:
        good = bset.is_delta_good(args.delta)
        payload["delta"] = args.delta
        payload["delta_good"] = good
        diagnostics.append(
            f"bias {bset.bias():.6g} is {'<=' if good else '>'} delta {args.delta:.6g}"
        )
    return CommandResult("ok", payload, diagnostics, out_doc=bset.to_json())


def cmd_hash(args) -> CommandResult:
    bset = _load_set(args)
    state = qstate.hash_state(bset, args.w)
    doc = state.to_json()
    payload = {"q": bset.q, "w": args.w, "state": doc}
    return CommandResult("ok", payload, [], out_doc=doc)


def cmd_compare(args) -> CommandResult:
    bset = _load_set(args)
    state_a = qstate.hash_state(bset, args.w)
    state_b = qstate.hash_state(bset, args.w2)
    ip = qstate.inner_product(state_a, state_b)
    payload = {
        "q": bset.q,
        "w": args.w,
        "w2": args.w2,
        "inner_product": [ip.real, ip.imag],
        "magnitude": abs(ip),
        "swap_probability": qstate.swap_test_probability(state_a, state_b),
        "reverse_probability": qstate.reverse_test_probability(bset, args.w, state_b),
    }
    return CommandResult("ok", payload, [])


def cmd_test(args) -> CommandResult:
    bset = _load_set(args)
    state_a = qstate.hash_state(bset, args.w)
    state_b = qstate.hash_state(bset, args.w2)
    outcome = qstate.simulate_equality_test(
        args.kind, state_a, state_b, args.trials, args.seed, workers=args.workers
    )
    payload = outcome.to_json()
    payload.update({"kind": args.kind, "q": bset.q, "w": args.w, "w2": args.w2, "seed": args.seed})
    return CommandResult("ok", payload, [])


def cmd_rs(args) -> CommandResult:
    if args.k < 2:
        raise RangeError(f"rs needs k >= 2, got {args.k}")
    bset = _load_set(args)
    field_ctx = bset.field
    if args.k > args.n or args.n > field_ctx.q:
        raise RangeError(f"need 2 <= k <= n <= q, got k={args.k}, n={args.n}, q={field_ctx.q}")
    if args.points:
        fam = gen_mod.RSFamily(field_ctx, args.k, _csv_ints(args.points))
        if fam.n != args.n:
            raise RangeError(f"--n {args.n} disagrees with {fam.n} points")
    else:
        fam = gen_mod.RSFamily.with_default_points(field_ctx, args.k, args.n)
    gen = gen_mod.ComposedGenerator(gen_mod.LinearFamily(bset), fam)
    message = _csv_ints(args.message)
    codeword = fam.encode(message)
    state = gen_mod.composed_hash_state(gen, message)
    doc = state.to_json()
    payload = {
        "generator": gen.to_json(),
        "message": message,
        "codeword": list(codeword),
        "state": doc,
    }
    diagnostics = [f"codeword: {list(codeword)}"]
    if args.exhaustive_delta:
        delta = gen_mod.generator_collision_delta(gen, domain_limit=args.domain_cap)
        bound = (args.k - 1) / fam.n + bset.bias()
        payload["delta"] = delta
        payload["delta_bound"] = bound
        diagnostics.append(f"delta {delta:.6g} vs bound {bound:.6g}")
    return CommandResult("ok", payload, diagnostics, out_doc=doc)


def cmd_bounds(args) -> CommandResult:
    if args.delta is None:
        payload = {
            "K": args.K,
            "s": args.s,
            "epsilon_bound": bounds_mod.holevo_nayak_epsilon(args.s, args.K),
        }
        return CommandResult("ok", payload, [])
    report = bounds_mod.resistance_report(args.K, args.s, args.delta)
    provenance = {"inputs": {"K": args.K, "s": args.s, "delta": args.delta}}
    return CommandResult("ok", report.to_json(provenance), [])


def cmd_pgm(args) -> CommandResult:
    if args.demo_orthonormal is not None:
        dim = args.demo_orthonormal
        if not 1 <= dim <= 64 or dim & (dim - 1):
            raise RangeError(f"--demo-orthonormal needs a power of two in [1, 64], got {dim}")
        states = [qstate.basis_encoding(v, max(1, dim.bit_length() - 1)) for v in range(dim)]
        ensemble = bounds_mod.StateEnsemble.uniform(states)
        k_count = dim
        s = states[0].num_qubits
        source = {"demo_orthonormal": dim}
    else:
        bset = _load_set(args)
        ensemble = bounds_mod.StateEnsemble.from_hash_function(bset)
        k_count = bset.q
        s = ensemble.states[0].num_qubits
        source = {"set": args.set, "q": bset.q, "elements": list(bset.elements)}
    success = bounds_mod.pgm_success(ensemble)
    payload = {
        "success": success,
        "K": k_count,
        "s": s,
        "epsilon_bound": bounds_mod.holevo_nayak_epsilon(s, k_count),
        "provenance": source,
    }
    return CommandResult("ok", payload, [])


def cmd_coherent(args) -> CommandResult:
    bset = _load_set(args)
    alpha = _parse_alpha(args.alpha)
    state_w = coherent_mod.coherent_hash(bset, args.w, alpha)
    payload = {
        "q": bset.q,
        "alpha": [alpha.real, alpha.imag],
        "w": args.w,
        "state_w": state_w.to_json(),
    }
    out_doc = state_w.to_json()
    if args.w2 is not None:
        state_w2 = coherent_mod.coherent_hash(bset, args.w2, alpha)
        overlap = coherent_mod.coherent_overlap(state_w, state_w2)
        payload["w2"] = args.w2
        payload["state_w2"] = state_w2.to_json()
        payload["overlap"] = [overlap.real, overlap.imag]
        payload["overlap_magnitude"] = abs(overlap)
    return CommandResult("ok", payload, [], out_doc=out_doc)


def _add_set_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--set", help="bias-set JSON file")
    parser.add_argument("--q", type=int, help="modulus (with --elements, instead of --set)")
    parser.add_argument("--elements", help="comma-separated elements (with --q)")


def build_parser() -> _Parser:
    parser = _Parser(prog="qhash", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--out", help="write the command's document to this path")
        p.add_argument("--format", choices=["json"], default="json")
        return p

    p = add("search", cmd_search, "search for a low-bias subset of F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "heuristic"], default="exhaustive")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = add("bias", cmd_bias, "bias of a set, optionally checked against --delta")
    _add_set_arguments(p)
    p.add_argument("--delta", type=float)

    p = add("hash", cmd_hash, "phase-encode one input as a state vector")
    _add_set_arguments(p)
    p.add_argument("--w", type=int, required=True)

    p = add("compare", cmd_compare, "inner product and test probabilities for a pair")
    _add_set_arguments(p)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--w2", type=int, required=True)

    p = add("test", cmd_test, "Monte-Carlo equality testing")
    _add_set_arguments(p)
    p.add_argument("--kind", choices=["swap", "reverse"], required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--w2", type=int, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = add("rs", cmd_rs, "composed polynomial-evaluation hash state")
    _add_set_arguments(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", help="comma-separated evaluation points (default 1..n)")
    p.add_argument("--message", required=True, help="comma-separated message symbols")
    p.add_argument("--exhaustive-delta", action="store_true")
    p.add_argument("--domain-cap", type=int, default=DEFAULT_DOMAIN_CAP)

    p = add("bounds", cmd_bounds, "decoding cap and qubit lower bound")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", type=float)

    p = add("pgm", cmd_pgm, "square-root-measurement decoder success")
    _add_set_arguments(p)
    p.add_argument("--demo-orthonormal", type=int, help="use an orthonormal basis ensemble")

    p = add("coherent", cmd_coherent, "coherent-state encoding and overlaps")
    _add_set_arguments(p)
    p.add_argument("--alpha", required=True, help="RE or RE,IM")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--w2", type=int)

    return parser


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """Parse argv and execute; domain failures become error results."""
    args = build_parser().parse_args(argv)
    try:
        result = args.handler(args)
    except QHashError as exc:
        return CommandResult("error", {}, [f"{type(exc).__name__}: {exc}"])
    if args.out:
        dump_json(result.out_doc if result.out_doc is not None else result.payload, args.out)
    return result


def main(argv: Optional[List[str]] = None) -> int:
    result = run(argv)
    sys.stdout.write(dumps_json(result.envelope()))
    return EXIT_OK if result.status == "ok" else EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
