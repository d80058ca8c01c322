"""Command-line front-end.

Subcommands:

* qdet      deformed log-determinant of a spectrum or zeta model, with
            optional reference operators for relative determinants and an
            optional power transform of the inputs,
* zeta      zeta values and zeta'(0) of a model,
* geometry  simplex metric field export (CSV/JSON),
* weight    spectral-weight curves w(lambda) = lambda^(-q),
* verify    the full invariant battery with a JSON report.

Exit codes: 0 success, 1 verification failure, 2 input/domain error
(including poles and argument errors). Numeric CSV cells carry 17
significant digits so identical inputs give byte-identical files.

Operand files are JSON objects ({"eigenvalues": [...], "scale": s} for
spectra, {"kind": ..., ...} for zeta models) or plain one-column CSV of
eigenvalues.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import geometry as geom
from . import spectrum as spc
from . import zeta as zt
from .errors import DomainError, PoleError, UnsupportedModelError
from .qalgebra import QParam, q_exp
from .verify import run_checks

__all__ = ["main", "build_parser"]

_TOLERANCE_SCALE_VAR = "QSPECTRA_TOLERANCE_SCALE"


# ---------------------------------------------------------------------------
# operand loading and report rendering


def _load_operand(path: str):
    """Read a Spectrum or ZetaModel from a file.

    JSON objects are dispatched on their keys ('kind' marks a model);
    anything else is parsed as one-column CSV of eigenvalues.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path!r}: {exc}") from exc
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path!r}: invalid JSON: {exc}") from exc
        if "kind" in obj:
            return zt.model_from_dict(obj)
        return spc.spectrum_from_json(text)
    try:
        return spc.spectrum_from_csv(text)
    except DomainError as exc:
        raise DomainError(f"{path!r}: {exc}") from exc


def _as_model(operand) -> zt.ZetaModel:
    if isinstance(operand, zt.ZetaModel):
        return operand
    return zt.from_spectrum(operand)


def _apply_theta(operand, theta: float):
    if isinstance(operand, spc.Spectrum):
        return spc.power_transform(operand, theta)
    return zt.power_transform_model(operand, theta)


def _json_safe(value):
    """Replace non-finite floats by strings so reports stay strict JSON."""
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def _render_csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_json_safe(report), indent=2) + "\n"
    lines = ["field,value"]
    lines.extend(f"{key},{_render_csv_cell(val)}" for key, val in report.items())
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_qdet(args: argparse.Namespace) -> int:
    operand = _load_operand(args.input)
    refs = [_load_operand(p) for p in args.input_ref]
    if args.theta is not None:
        operand = _apply_theta(operand, args.theta)
        refs = [_apply_theta(r, args.theta) for r in refs]
    qp = QParam(args.q)

    pole = None
    ref_pole = None
    if refs:
        if all(isinstance(r, spc.Spectrum) for r in refs):
            reference = spc.concatenate(*refs)
        elif len(refs) == 1:
            reference = refs[0]
        else:
            raise DomainError(
                "multiple --input-ref operators combine by direct sum, "
                "which needs finite spectra"
            )
        if isinstance(operand, spc.Spectrum) and isinstance(reference, spc.Spectrum):
            method = "q_logdet"
            value = spc.relative_q_logdet(operand, reference, qp)
        else:
            method = "qdet_zeta"
            model, ref_model = _as_model(operand), _as_model(reference)
            pole = zt.model_pole(model)
            ref_pole = zt.model_pole(ref_model)
            value = zt.relative_qdet_zeta(model, ref_model, qp)
    elif isinstance(operand, spc.Spectrum):
        method = "q_logdet"
        value = spc.q_logdet(operand, qp)
    else:
        method = "qdet_zeta"
        pole = zt.model_pole(operand)
        value = zt.qdet_zeta(operand, qp)

    det = q_exp(value, qp)
    report = {
        "command": "qdet",
        "q": qp.q,
        "theta": args.theta,
        "operator": "spectrum" if isinstance(operand, spc.Spectrum) else "model",
        "relative": bool(refs),
        "method": method,
        "value": value,
        "q_det": det.value,
        "clamped": det.clamped,
        "pole": pole,
        "reference_pole": ref_pole,
    }
    _emit(_render_report(report, args.format), args.out)
    return 0


def _cmd_zeta(args: argparse.Namespace) -> int:
    model = _as_model(_load_operand(args.input))
    if args.deriv0 == (args.s is not None):
        raise DomainError("exactly one of --s and --deriv0 is required")
    value = zt.zeta_deriv0(model) if args.deriv0 else zt.zeta_value(model, args.s)
    report = {
        "command": "zeta",
        "model_kind": model.kind,
        "scale": model.scale,
        "s": args.s,
        "deriv0": args.deriv0,
        "value": value,
        "pole": zt.model_pole(model),
    }
    _emit(_render_report(report, args.format), args.out)
    return 0


def _cmd_geometry(args: argparse.Namespace) -> int:
    field = geom.grid_field(args.resolution, args.q, args.margin)
    if args.format == "json":
        text = geom.field_to_json(field) + "\n"
    else:
        text = geom.field_to_csv(field)
    _emit(text, args.out)
    return 0


def _parse_q_list(text: str) -> list[float]:
    try:
        qs = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise DomainError(f"invalid q list {text!r}: {exc}") from exc
    if not qs:
        raise DomainError("q list must contain at least one value")
    return qs


def _weight_lambdas(lmin: float, lmax: float, samples: int) -> list[float]:
    if not (lmin > 0.0 and lmax > 0.0):
        raise DomainError("lambda bounds must be positive")
    if not lmin < lmax:
        raise DomainError(f"need lambda-min < lambda-max, got [{lmin}, {lmax}]")
    if samples < 2:
        raise DomainError(f"samples must be >= 2, got {samples}")
    exps = np.linspace(math.log10(lmin), math.log10(lmax), samples)
    # snap the exponent so the grid hits lambda = 1 exactly, then force the
    # crossing point in whenever the range straddles it
    lams = {1.0 if abs(e) < 1e-12 else float(10.0**e) for e in exps}
    if lmin < 1.0 < lmax:
        lams.add(1.0)
    return sorted(lams)


def _cmd_weight(args: argparse.Namespace) -> int:
    qs = _parse_q_list(args.q_list)
    lams = _weight_lambdas(args.lambda_min, args.lambda_max, args.samples)
    labels = [f"q={q:g}" for q in qs]
    rows = [[lam] + [spc.spectral_weight(lam, q) for q in qs] for lam in lams]
    if args.format == "json":
        objs = [
            dict(zip(["lambda"] + labels, row))
            for row in rows
        ]
        text = json.dumps(objs) + "\n"
    else:
        lines = [",".join(["lambda"] + labels)]
        lines.extend(",".join(f"{v:.17g}" for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    raw_scale = os.environ.get(_TOLERANCE_SCALE_VAR, "1")
    try:
        scale = float(raw_scale)
    except ValueError as exc:
        raise DomainError(
            f"{_TOLERANCE_SCALE_VAR} must be a number, got {raw_scale!r}"
        ) from exc
    if not (math.isfinite(scale) and scale > 0.0):
        raise DomainError(f"{_TOLERANCE_SCALE_VAR} must be positive, got {scale!r}")
    try:
        results = run_checks(scale, dict(args.tolerance))
    except KeyError as exc:
        raise DomainError(str(exc)) from exc

    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"{status} {res.name}: residual={res.residual:.6g} "
            f"tolerance={res.tolerance:.6g}",
            file=sys.stderr,
        )
    failures = [res.name for res in results if not res.passed]
    report = {
        "command": "verify",
        "tolerance_scale": scale,
        "passed": not failures,
        "failures": failures,
        "checks": [res.as_dict() for res in results],
    }
    _emit(json.dumps(_json_safe(report), indent=2) + "\n", args.out)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# parser


def _tolerance_override(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name, float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid tolerance {value!r}") from exc


def _add_io_flags(sub: argparse.ArgumentParser, default_format: str) -> None:
    sub.add_argument(
        "--format", choices=("csv", "json"), default=default_format,
        help="output format (default %(default)s)",
    )
    sub.add_argument("--out", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspectra",
        description="Deformed spectral determinants, zeta continuation, "
        "simplex geometry, and self-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_qdet = sub.add_parser(
        "qdet", help="deformed log-determinant of a spectrum or zeta model"
    )
    p_qdet.add_argument("--q", type=float, required=True, help="deformation index")
    p_qdet.add_argument(
        "--theta", type=float, default=None,
        help="apply the power map A -> A^theta to every input first",
    )
    p_qdet.add_argument("--input", required=True, help="operand file")
    p_qdet.add_argument(
        "--input-ref", action="append", default=[], metavar="PATH",
        help="reference operator for a relative determinant; repeatable, "
        "multiple finite spectra combine by direct sum",
    )
    _add_io_flags(p_qdet, "json")
    p_qdet.set_defaults(func=_cmd_qdet)

    p_zeta = sub.add_parser("zeta", help="zeta values and zeta'(0) of a model")
    p_zeta.add_argument("--input", required=True, help="operand file")
    p_zeta.add_argument("--s", type=float, default=None, help="evaluation point")
    p_zeta.add_argument(
        "--deriv0", action="store_true", help="emit zeta'(0) instead of a value"
    )
    _add_io_flags(p_zeta, "json")
    p_zeta.set_defaults(func=_cmd_zeta)

    p_geom = sub.add_parser("geometry", help="simplex metric field export")
    p_geom.add_argument("--q", type=float, default=1.4, help="deformation index")
    p_geom.add_argument(
        "--resolution", type=int, default=60, help="lattice refinement"
    )
    p_geom.add_argument(
        "--margin", type=float, default=1e-3,
        help="minimum distance from the simplex boundary",
    )
    _add_io_flags(p_geom, "csv")
    p_geom.set_defaults(func=_cmd_geometry)

    p_weight = sub.add_parser("weight", help="spectral-weight curves lambda^(-q)")
    p_weight.add_argument(
        "--q-list", default="0.5,1,2",
        help="comma-separated deformation indices (default %(default)s)",
    )
    p_weight.add_argument("--lambda-min", type=float, default=0.1)
    p_weight.add_argument("--lambda-max", type=float, default=10.0)
    p_weight.add_argument(
        "--samples", type=int, default=101, help="points on the log-spaced grid"
    )
    _add_io_flags(p_weight, "csv")
    p_weight.set_defaults(func=_cmd_weight)

    p_verify = sub.add_parser("verify", help="run the invariant battery")
    p_verify.add_argument(
        "--tolerance", action="append", type=_tolerance_override, default=[],
        metavar="NAME=VALUE", help="override one check's tolerance; repeatable",
    )
    p_verify.add_argument("--out", default=None, help="report file (default stdout)")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, PoleError, UnsupportedModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
