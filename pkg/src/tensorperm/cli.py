"""Command-line interface.

Subcommands: gen (emit a matrix), verify (run the property suite for one
spec), classify (swap labels of an order), decompose (swap matrix over the
Gell-Mann products), apply (permute a vector file), bench (implicit apply
vs dense matvec).

Exit codes: 0 success, 2 usage or validation error, 3 capacity error.
Diagnostics go to stderr; stdout carries data only.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from .index_algebra import DimList, Sigma, induced_index_perm
from .matrix_core import DEFAULT_DENSE_BOUND, CapacityError, kron
from .perm_matrix import (
    TensorPermSpec,
    apply as apply_perm,
    build_delta,
    build_elementary_sum,
    build_stride_rule,
    commutation_conjugation_check,
    is_permutation_matrix,
    tcm_spec,
)
from .gellmann import decompose_swap
from . import formats

_VERIFY_SAMPLES = 25
_VERIFY_SEED = 20240311


def _parse_int_list(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"{name} must be a comma-separated list of integers, got {text!r}")


def _spec_from_args(args) -> TensorPermSpec:
    dims = DimList(_parse_int_list(args.dims, "--dims"))
    if args.sigma is None:
        sigma = Sigma.reversal(len(dims))
    else:
        sigma = Sigma(_parse_int_list(args.sigma, "--sigma"))
    return TensorPermSpec(dims, sigma)


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    if args.format == "perm":
        text = formats.write_perm(induced_index_perm(spec.dims, spec.sigma))
    else:
        dense = build_delta(spec, dense_bound=args.dense_bound)
        if args.format == "mm":
            text = formats.write_matrix_market(dense)
        elif args.format == "dense":
            text = formats.write_dense(dense)
        else:
            text = formats.write_blocks(dense, block=spec.dims.dims[-1])
    _emit(text, args.output)
    return 0


def _kron_vector(parts: list[np.ndarray]) -> np.ndarray:
    out = parts[0].reshape(-1, 1)
    for part in parts[1:]:
        out = kron(out, part.reshape(-1, 1), dense_bound=out.shape[0] * part.shape[0])
    return out.ravel()


def _cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    size = spec.size
    if size > args.dense_bound:
        raise CapacityError(f"dense order {size} exceeds dense bound {args.dense_bound}")
    rng = np.random.default_rng(_VERIFY_SEED)
    dims = spec.dims.dims
    sigma = spec.sigma

    dense = build_delta(spec, dense_bound=args.dense_bound)
    agree = np.array_equal(dense, build_elementary_sum(spec, dense_bound=args.dense_bound))
    if len(dims) == 2 and sigma.mapping == (2, 1):
        agree = agree and np.array_equal(
            dense, build_stride_rule(dims[0], dims[1], dense_bound=args.dense_bound)
        )

    relocation = True
    for _ in range(_VERIFY_SAMPLES):
        vecs = [rng.integers(-9, 10, d) for d in dims]
        got = apply_perm(spec, _kron_vector(vecs))
        want = _kron_vector([vecs[sigma(t) - 1] for t in range(1, len(dims) + 1)])
        relocation = relocation and np.array_equal(got, want)

    conjugation = all(
        commutation_conjugation_check(spec, [rng.integers(-9, 10, (d, d)) for d in dims])
        for _ in range(_VERIFY_SAMPLES)
    )

    dual_spec = TensorPermSpec(spec.dims.permuted(sigma), sigma.inverse())
    duality = np.array_equal(dense.T, build_delta(dual_spec, dense_bound=args.dense_bound))

    checks = [
        ("constructor-agreement", agree),
        ("vector-relocation", relocation),
        ("matrix-conjugation", conjugation),
        ("transpose-duality", duality),
        ("permutation-shape", is_permutation_matrix(dense)),
    ]
    for name, ok in checks:
        print(("PASS" if ok else "FAIL"), name)
    return 0 if all(ok for _, ok in checks) else 1


def _cmd_classify(args) -> int:
    order = args.order
    if order < 1:
        raise ValueError(f"order must be a positive integer, got {order}")
    if order > args.dense_bound:
        raise CapacityError(f"dense order {order} exceeds dense bound {args.dense_bound}")
    factorizations = [(n, order // n) for n in range(1, order + 1) if order % n == 0]
    mats = {
        (n, p): build_delta(tcm_spec(n, p), dense_bound=args.dense_bound)
        for n, p in factorizations
    }
    identity = np.eye(order, dtype=np.int64)
    for n, p in factorizations:
        marks = []
        if np.array_equal(mats[(n, p)], identity):
            marks.append("identity")
        partners = [
            f"{a}x{b}"
            for a, b in factorizations
            if (a, b) != (n, p) and np.array_equal(mats[(a, b)], mats[(n, p)])
        ]
        if partners:
            marks.append("= " + " = ".join(partners))
        print(" ".join([f"{n}x{p}", *marks]).rstrip())
    return 0


def _cmd_decompose(args) -> int:
    dec = decompose_swap(args.n, dense_bound=args.dense_bound)
    sys.stdout.write(formats.write_decomposition(dec, tol=args.tolerance))
    return 0


def _parse_scalar(tok: str):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        raise ValueError(f"cannot parse vector entry {tok!r}")


def _format_scalar(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.10g}"


def _cmd_apply(args) -> int:
    spec = _spec_from_args(args)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            text = fh.read()
    values = [_parse_scalar(tok) for tok in text.split()]
    if len(values) != spec.size:
        raise ValueError(f"vector length {len(values)} does not match size {spec.size}")
    for value in apply_perm(spec, values):
        print(_format_scalar(value))
    return 0


def _cmd_bench(args) -> int:
    spec = _spec_from_args(args)
    if args.reps < 1:
        raise ValueError(f"--reps must be at least 1, got {args.reps}")
    size = spec.size
    vec = np.arange(1, size + 1, dtype=np.float64)

    apply_perm(spec, vec)  # warm the index cache before timing
    t0 = time.perf_counter_ns()
    for _ in range(args.reps):
        apply_perm(spec, vec)
    implicit_ns = max((time.perf_counter_ns() - t0) // args.reps, 1)
    print(f"implicit apply: {implicit_ns} ns/application ({args.reps} reps)")

    if size <= args.dense_bound:
        # float64 from the start: one 134 MB array instead of two at the
        # default bound, and BLAS gets its native dtype
        perm = induced_index_perm(spec.dims, spec.sigma)
        dense = np.zeros((size, size), dtype=np.float64)
        dense[np.arange(size), np.asarray(perm.col_of_row, dtype=np.intp) - 1] = 1.0
        dense @ vec
        t0 = time.perf_counter_ns()
        for _ in range(args.reps):
            dense @ vec
        dense_ns = max((time.perf_counter_ns() - t0) // args.reps, 1)
        print(f"dense matvec: {dense_ns} ns/application ({args.reps} reps)")
        print(f"dense/implicit ratio: {dense_ns / implicit_ns:.2f}x")
        dense_field = str(dense_ns)
    else:
        print(
            f"dense path skipped: order {size} exceeds dense bound {args.dense_bound}",
            file=sys.stderr,
        )
        dense_field = "skipped"
    print(f"bench dims={args.dims} implicit_ns={implicit_ns} dense_ns={dense_field}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensorperm",
        description="Construct, apply, verify, and decompose tensor permutation matrices.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_spec_flags(p, sigma_help="permutation as the image list sigma(1),...,sigma(k); defaults to the full reversal"):
        p.add_argument("--dims", required=True, help="comma-separated factor dimensions, e.g. 3,2")
        p.add_argument("--sigma", default=None, help=sigma_help)

    def add_bound_flag(p):
        p.add_argument("--dense-bound", type=int, default=DEFAULT_DENSE_BOUND,
                       help="largest dense order allowed (default %(default)s)")

    p = sub.add_parser("gen", help="emit a tensor permutation matrix")
    add_spec_flags(p)
    p.add_argument("--format", choices=("mm", "perm", "dense", "blocks"), default="perm")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    add_bound_flag(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run the property suite for one spec")
    add_spec_flags(p)
    add_bound_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="list the swap labels of an order")
    p.add_argument("--order", type=int, required=True)
    add_bound_flag(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", help="expand the swap matrix over basis products")
    p.add_argument("--n", type=int, required=True, help="factor dimension (>= 2)")
    p.add_argument("--tolerance", type=float, default=1e-10,
                   help="omit coefficients at or below this magnitude (default %(default)s)")
    add_bound_flag(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("apply", help="permute a vector read from a file")
    add_spec_flags(p)
    p.add_argument("--input", required=True, help="vector file, one entry per line ('-' for stdin)")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("bench", help="time implicit apply against dense matvec")
    add_spec_flags(p)
    p.add_argument("--reps", type=int, default=100)
    add_bound_flag(p)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
