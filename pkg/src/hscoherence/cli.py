"""Command-line interface.

Subcommands::

    coherence FILE
    rec-curve --l1 V --steps N
    dynamics --channel {pd,ad} --w V --steps N
    nmutp --dims 2,3,4,5 --samples N --seed S --workers W
    demo-inversion

Tables go to stdout as CSV (header row, comma separated, LF endings);
reports as JSON. Floats carry 12 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

import numpy as np

from .channels import rho_w, sweep
from .coherence import coherence_report, qubit_rec_closed
from .matops import DensityMatrix, InvalidStateError
from .nmutp import coherence_inversion_demo, estimate

PRECISION = 12


def fmt(x: float) -> str:
    s = format(float(x), f".{PRECISION}g")
    return "0" if s in ("-0", "0") else s


def _round(obj):
    if isinstance(obj, (bool, int)):
        return obj
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    return obj


def dumps(obj) -> str:
    return json.dumps(_round(obj))


def load_state(path: str) -> DensityMatrix:
    """Read a state file: ``{"dims": [...], "matrix": [[[re, im], ...], ...]}``.

    Raises InvalidStateError naming the violated invariant.
    """
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidStateError("format", f"not valid JSON ({exc})") from None
    if not isinstance(data, dict) or "matrix" not in data:
        raise InvalidStateError("format", "expected an object with 'dims' and 'matrix'")
    try:
        arr = np.asarray(data["matrix"], dtype=float)
    except (TypeError, ValueError):
        raise InvalidStateError("format", "matrix entries must be [re, im] number pairs") from None
    if arr.ndim != 3 or arr.shape[-1] != 2:
        raise InvalidStateError("format", f"matrix must be rows of [re, im] pairs, got array shape {arr.shape}")
    dims = data.get("dims") or [arr.shape[0]]
    return DensityMatrix(arr[..., 0] + 1j * arr[..., 1], tuple(dims)).validate()


def state_to_json(rho: DensityMatrix) -> dict:
    m = rho.mat
    return {
        "dims": list(rho.dims),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def _write_csv(header: Sequence[str], rows, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])


def rec_curve_rows(c_l1: float, steps: int) -> list[tuple[float, float, float]]:
    if not 0.0 <= c_l1 <= 1.0:
        raise ValueError(f"--l1 must lie in [0, 1], got {c_l1}")
    if steps < 2:
        raise ValueError(f"--steps must be >= 2, got {steps}")
    amax = float(np.sqrt(max(1.0 - c_l1 * c_l1, 0.0)))
    grid = [0.0] if amax == 0.0 else np.linspace(-amax, amax, steps)
    return [(float(a), qubit_rec_closed(float(a), c_l1), float(np.hypot(a, c_l1))) for a in grid]


def cmd_coherence(args, out) -> int:
    rho = load_state(args.file)
    out.write(dumps(coherence_report(rho).as_dict()) + "\n")
    return 0


def cmd_rec_curve(args, out) -> int:
    _write_csv(("a", "c_re", "bloch_norm"), rec_curve_rows(args.l1, args.steps), out)
    return 0


def cmd_dynamics(args, out) -> int:
    res = sweep(args.channel, rho_w(args.w), args.steps)
    _write_csv(("p", "c_hs", "c_l1", "c_re"), res.rows, out)
    return 0


def cmd_nmutp(args, out) -> int:
    for d in args.dims:
        est = estimate(d, args.samples, args.seed, args.workers)
        out.write(dumps(est.as_dict()) + "\n")
        out.flush()
    return 0


def cmd_demo_inversion(args, out) -> int:
    out.write(dumps(coherence_inversion_demo().as_dict()) + "\n")
    return 0


def _positive_int(minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v

    return parse


def _unit_interval(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {v}")
    return v


def _dims_list(text: str) -> list[int]:
    try:
        dims = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not dims or any(d < 2 for d in dims):
        raise argparse.ArgumentTypeError(f"every dimension must be >= 2, got {text!r}")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hscoherence",
        description="Hilbert-Schmidt coherence toolkit for qudit states.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coherence", help="HS, l1 and relative-entropy coherence of a state file")
    p.add_argument("file", help="JSON state file with 'dims' and 'matrix' ([re, im] pairs)")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("rec-curve", help="qubit REC versus <Diag(1)> at fixed l1 coherence (CSV)",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--l1", type=_unit_interval, default=0.5, help="fixed l1-norm coherence")
    p.add_argument("--steps", type=_positive_int(2), default=101, help="grid points")
    p.set_defaults(func=cmd_rec_curve)

    p = sub.add_parser("dynamics", help="coherences of rho_w under qutrit PD/AD channels (CSV)",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--channel", choices=("pd", "ad"), required=True)
    p.add_argument("--w", type=_unit_interval, default=1.0, help="weight of the uniform pure state")
    p.add_argument("--steps", type=_positive_int(2), default=101, help="grid points in p")
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("nmutp", help="Monte Carlo inversion percentages (JSON lines)",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--dims", type=_dims_list, default=[2, 3, 4, 5], help="comma-separated dimensions")
    p.add_argument("--samples", type=_positive_int(1), default=100_000, help="quartets per dimension")
    p.add_argument("--seed", type=int, default=2017)
    p.add_argument("--workers", type=_positive_int(1), default=1, help="worker processes")
    p.set_defaults(func=cmd_nmutp)

    p = sub.add_parser("demo-inversion", help="two-qubit coherence inversion example (JSON)")
    p.set_defaults(func=cmd_demo_inversion)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (OSError, ValueError) as exc:
        # InvalidStateError is a ValueError; its message names the invariant
        print(f"hscoherence: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
