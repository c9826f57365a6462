"""Command line interface for single points and parameter sweeps.

Every numeric option accepts either a single value ("0.5") or a sweep
"min:max:steps" ("0:0.9:19"); at most one option may sweep per invocation.
Rows stream in sweep order.  CSV output is RFC-4180 style with a header row;
JSON output is an array of flat objects with the same field names.  Numbers
are printed with 12 significant digits, so repeated runs are byte-identical.

Exit codes: 0 success, 2 domain or validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import pathlib
import sys

import numpy as np

from .errors import DegenerateState, DomainError, TruncationError, ZeroNormState
from .fock import (
    FockSpace,
    characteristic_function_closed,
    characteristic_function_numeric,
    default_truncation,
    mean_photon_number,
    mean_photon_number_closed,
    partial_trace,
    quasi_bell_coherent,
    synthesize_hadamard,
)
from .gates import generate_quasi_bell
from .twostate import (
    GeneralWeights,
    OverlapPair,
    concurrence,
    general_state,
    gram_matrix,
    reduced_density,
)


def _parse_float(text: str, name: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise DomainError(f"{name} expects a number, got {text!r}") from exc
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {text!r}")
    return value


def parse_axis(text: str, name: str) -> list[float]:
    """Parse VALUE or MIN:MAX:STEPS into a list of points."""
    parts = text.split(":")
    if len(parts) == 1:
        return [_parse_float(parts[0], name)]
    if len(parts) != 3:
        raise DomainError(f"{name} expects VALUE or MIN:MAX:STEPS, got {text!r}")
    lo = _parse_float(parts[0], name)
    hi = _parse_float(parts[1], name)
    try:
        steps = int(parts[2])
    except ValueError as exc:
        raise DomainError(f"{name} sweep steps must be an integer, got {parts[2]!r}") from exc
    if steps < 2:
        raise DomainError(f"{name} sweep needs at least 2 steps, got {steps}")
    if not lo < hi:
        raise DomainError(f"{name} sweep needs MIN < MAX, got {lo} and {hi}")
    return [float(v) for v in np.linspace(lo, hi, steps)]


def parse_int_axis(text: str, name: str) -> list[int]:
    values = parse_axis(text, name)
    out = []
    for v in values:
        r = round(v)
        if abs(v - r) > 1e-9:
            raise DomainError(f"{name} sweep must hit integers, got {v}")
        out.append(int(r))
    return out


def _require_single_sweep(**axes) -> None:
    swept = [name for name, values in axes.items() if len(values) > 1]
    if len(swept) > 1:
        raise DomainError(f"only one option may sweep, got: {', '.join(sorted(swept))}")


def _space_for(alpha: float, nmax: int | None) -> FockSpace:
    return FockSpace(nmax) if nmax is not None else FockSpace(default_truncation(alpha))


def _format_number(value: float) -> str:
    value = float(value)
    if not math.isfinite(value):
        raise TruncationError("non-finite value in output")
    if value == 0.0:
        value = 0.0
    return f"{value:.12g}"


def _render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(columns)
    for row in rows:
        cells = []
        for col in columns:
            value = row[col]
            if value is None:
                cells.append("")
            elif isinstance(value, str):
                cells.append(value)
            elif isinstance(value, (int, np.integer)):
                cells.append(str(int(value)))
            else:
                cells.append(_format_number(value))
        writer.writerow(cells)
    return buf.getvalue()


def _render_json(columns, rows) -> str:
    records = []
    for row in rows:
        record = {}
        for col in columns:
            value = row[col]
            if value is None or isinstance(value, str):
                record[col] = value
            elif isinstance(value, (int, np.integer)):
                record[col] = int(value)
            else:
                record[col] = float(_format_number(value))
        records.append(record)
    return json.dumps(records, indent=2) + "\n"


def cmd_entropy(args) -> tuple[list[str], list[dict]]:
    columns = [
        "alpha",
        "kappa",
        "index",
        "beta",
        "method",
        "entropy_bits",
        "lambda_1",
        "lambda_2",
        "concurrence",
    ]
    index = args.index
    beta_axis = parse_axis(args.beta, "beta") if args.beta is not None else [math.sqrt(0.5)]
    if args.fock and args.kappa is not None:
        raise DomainError("--fock requires --alpha")
    if args.fock and args.beta is not None:
        raise DomainError("--beta is not supported with --fock")
    if args.kappa is not None:
        kappa_axis = parse_axis(args.kappa, "kappa")
        points = [(None, k) for k in kappa_axis]
        _require_single_sweep(kappa=kappa_axis, beta=beta_axis)
    else:
        alpha_axis = parse_axis(args.alpha, "alpha")
        points = [(a, math.exp(-2.0 * a * a)) for a in alpha_axis]
        _require_single_sweep(alpha=alpha_axis, beta=beta_axis)
    rows = []
    for alpha, kappa in points:
        for beta in beta_axis:
            if args.fock:
                space = _space_for(alpha, args.nmax)
                rho = partial_trace(quasi_bell_coherent(index, alpha, space), "A")
                eig = rho.eigenvalues()
                lam1, lam2 = float(eig[0]), float(eig[1])
                entropy = rho.entropy_bits()
                conc = 2.0 * math.sqrt(max(lam1 * lam2, 0.0))
                method = "fock"
            else:
                pair = OverlapPair(kappa)
                state = general_state(pair, GeneralWeights(beta), index)
                rho = reduced_density(state)
                eig = rho.eigenvalues()
                lam1, lam2 = float(eig[0]), float(eig[1])
                entropy = rho.entropy_bits()
                conc = concurrence(state)
                method = "closed"
            rows.append(
                {
                    "alpha": alpha,
                    "kappa": kappa,
                    "index": index,
                    "beta": beta,
                    "method": method,
                    "entropy_bits": entropy,
                    "lambda_1": lam1,
                    "lambda_2": lam2,
                    "concurrence": conc,
                }
            )
    return columns, rows


def cmd_photon(args) -> tuple[list[str], list[dict]]:
    columns = ["alpha", "kappa", "index", "n_closed", "n_numeric", "abs_diff"]
    alpha_axis = parse_axis(args.alpha, "alpha")
    _require_single_sweep(alpha=alpha_axis)
    rows = []
    worst = 0.0
    for alpha in alpha_axis:
        space = _space_for(alpha, args.nmax)
        closed = mean_photon_number_closed(args.index, alpha)
        numeric = mean_photon_number(args.index, alpha, space)
        diff = abs(closed - numeric)
        worst = max(worst, diff)
        rows.append(
            {
                "alpha": alpha,
                "kappa": math.exp(-2.0 * alpha * alpha),
                "index": args.index,
                "n_closed": closed,
                "n_numeric": numeric,
                "abs_diff": diff,
            }
        )
    if worst > args.tol:
        raise TruncationError(f"closed/numeric disagreement {worst:.3e} exceeds tol {args.tol:g}")
    return columns, rows


def cmd_charfunc(args) -> tuple[list[str], list[dict]]:
    columns = ["xi_re", "xi_im", "eta_re", "eta_im", "c_re", "c_im", "abs_diff"]
    alpha_axis = parse_axis(args.alpha, "alpha")
    xi_re_axis = parse_axis(args.xi_re, "xi-re")
    xi_im_axis = parse_axis(args.xi_im, "xi-im")
    eta_re_axis = parse_axis(args.eta_re, "eta-re")
    eta_im_axis = parse_axis(args.eta_im, "eta-im")
    _require_single_sweep(
        alpha=alpha_axis,
        xi_re=xi_re_axis,
        xi_im=xi_im_axis,
        eta_re=eta_re_axis,
        eta_im=eta_im_axis,
    )
    rows = []
    worst = 0.0
    for alpha in alpha_axis:
        space = _space_for(alpha, args.nmax)
        state = quasi_bell_coherent(args.index, alpha, space)
        for xr in xi_re_axis:
            for xi_im in xi_im_axis:
                for er in eta_re_axis:
                    for ei in eta_im_axis:
                        xi = complex(xr, xi_im)
                        eta = complex(er, ei)
                        numeric = characteristic_function_numeric(state, xi, eta)
                        closed = characteristic_function_closed(args.index, alpha, xi, eta)
                        diff = abs(numeric - closed)
                        worst = max(worst, diff)
                        rows.append(
                            {
                                "xi_re": xr,
                                "xi_im": xi_im,
                                "eta_re": er,
                                "eta_im": ei,
                                "c_re": numeric.real,
                                "c_im": numeric.imag,
                                "abs_diff": diff,
                            }
                        )
    if worst > args.tol:
        raise TruncationError(f"closed/numeric disagreement {worst:.3e} exceeds tol {args.tol:g}")
    return columns, rows


def cmd_synth(args) -> tuple[list[str], list[dict]]:
    columns = ["alpha", "m_cut", "delta_m", "gate_error"]
    alpha_axis = parse_axis(args.alpha, "alpha")
    m_axis = parse_int_axis(args.m_cut, "m-cut")
    _require_single_sweep(alpha=alpha_axis, m_cut=m_axis)
    rows = []
    for alpha in alpha_axis:
        space = _space_for(alpha, args.nmax)
        for m in m_axis:
            result = synthesize_hadamard(alpha, m, space)
            rows.append(
                {
                    "alpha": alpha,
                    "m_cut": m,
                    "delta_m": result.delta_m,
                    "gate_error": result.gate_error,
                }
            )
    return columns, rows


def cmd_generate(args) -> tuple[list[str], list[dict]]:
    columns = [
        "kappa",
        "a_ee",
        "a_eo",
        "a_oe",
        "a_oo",
        "fidelity",
        "fidelity_sq",
        "entropy_bits",
    ]
    kappa_axis = parse_axis(args.kappa, "kappa")
    _require_single_sweep(kappa=kappa_axis)
    rows = []
    for kappa in kappa_axis:
        out, fidelity = generate_quasi_bell(OverlapPair(kappa))
        amps = np.real(out.amplitudes)
        rows.append(
            {
                "kappa": kappa,
                "a_ee": float(amps[0]),
                "a_eo": float(amps[1]),
                "a_oe": float(amps[2]),
                "a_oo": float(amps[3]),
                "fidelity": fidelity,
                "fidelity_sq": fidelity * fidelity,
                "entropy_bits": reduced_density(out).entropy_bits(),
            }
        )
    return columns, rows


def cmd_gram(args) -> tuple[list[str], list[dict]]:
    columns = ["kappa"] + [f"g{i}{j}" for i in range(1, 5) for j in range(1, 5)]
    kappa_axis = parse_axis(args.kappa, "kappa")
    _require_single_sweep(kappa=kappa_axis)
    rows = []
    for kappa in kappa_axis:
        g = gram_matrix(OverlapPair(kappa))
        row = {"kappa": kappa}
        for i in range(4):
            for j in range(4):
                row[f"g{i + 1}{j + 1}"] = float(g[i, j])
        rows.append(row)
    return columns, rows


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    parser.add_argument("--nmax", type=int, metavar="N", help="Fock cutoff override")
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-6,
        metavar="X",
        help="closed/numeric cross-check tolerance where applicable",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasibell",
        description="Quasi-Bell state sweeps: entropy, photon numbers, "
        "characteristic functions, gate synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="entanglement entropy and concurrence")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--kappa", metavar="SPEC", help="pair overlap, value or sweep")
    group.add_argument("--alpha", metavar="SPEC", help="coherent amplitude, value or sweep")
    p.add_argument("--index", type=int, required=True, metavar="I")
    p.add_argument("--beta", metavar="SPEC", help="superposition weight, default 1/sqrt(2)")
    p.add_argument("--fock", action="store_true", help="numeric Fock-space route")
    _add_common(p)
    p.set_defaults(handler=cmd_entropy)

    p = sub.add_parser("photon", help="mean photon number, closed vs numeric")
    p.add_argument("--alpha", required=True, metavar="SPEC")
    p.add_argument("--index", type=int, required=True, metavar="I")
    _add_common(p)
    p.set_defaults(handler=cmd_photon)

    p = sub.add_parser("charfunc", help="two-mode characteristic function")
    p.add_argument("--alpha", required=True, metavar="SPEC")
    p.add_argument("--index", type=int, required=True, metavar="I")
    p.add_argument("--xi-re", default="0", metavar="SPEC")
    p.add_argument("--xi-im", default="0", metavar="SPEC")
    p.add_argument("--eta-re", default="0", metavar="SPEC")
    p.add_argument("--eta-im", default="0", metavar="SPEC")
    _add_common(p)
    p.set_defaults(handler=cmd_charfunc)

    p = sub.add_parser("synth", help="cutoff-M Hadamard synthesis diagnostics")
    p.add_argument("--alpha", required=True, metavar="SPEC")
    p.add_argument("--m-cut", required=True, metavar="SPEC")
    _add_common(p)
    p.set_defaults(handler=cmd_synth)

    p = sub.add_parser("generate", help="two-gate preparation circuit output")
    p.add_argument("--kappa", required=True, metavar="SPEC")
    _add_common(p)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("gram", help="pairwise state overlaps")
    p.add_argument("--kappa", required=True, metavar="SPEC")
    _add_common(p)
    p.set_defaults(handler=cmd_gram)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        columns, rows = args.handler(args)
        if args.format == "csv":
            text = _render_csv(columns, rows)
        else:
            text = _render_json(columns, rows)
    except (DomainError, DegenerateState, ZeroNormState) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        pathlib.Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
