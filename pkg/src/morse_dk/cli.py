"""Command-line entry point ``morse-dk``.

Sub-commands
------------
spectrum         closed-form levels of one potential (JSON + CSV)
verify           analytic backends against the finite-difference oracle
kernel           radial-oscillator kernel sweep (closed / spectral / sliced)
hille-hardy      bilinear Laguerre generating function residual table
pt-check         PT-symmetry verdict for one potential
realness-sweep   imaginary parts of the printed complex-Morse levels over random draws

Exit codes: 0 success, 2 configuration error, 3 tolerance failure,
4 numerical non-convergence.

Every command accepts ``--config FILE``: a flat JSON object with the
potential fields plus optional ``grid``, ``tolerances`` and ``output_dir``
entries.  Flags given on the command line override file values.  The output
directory defaults to ``$MORSE_DK_OUTPUT_DIR`` and then to ``./morse_dk_out``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__, analytic, oracle, propagator, specfun
from .analytic import Backend
from .linalg import ConvergenceError
from .model import (Convention, EffectiveOscillator, PotentialSpec, Variant,
                    check_pt_symmetry)

log = logging.getLogger("morse_dk")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_TOLERANCE = 3
EXIT_NONCONVERGENCE = 4

DEFAULT_TOLERANCES = {"energy": 1e-6, "residual": 1e-6}
DEFAULT_OUTPUT_DIR = "morse_dk_out"
KERNEL_CSV_HEADER = ("tau", "u_a", "u_b", "re_K", "im_K", "method")
HILLE_HARDY_CSV_HEADER = ("t", "x", "y", "a", "n_trunc", "closed_re", "closed_im",
                          "series_re", "series_im", "residual",
                          "printed_re", "printed_im", "printed_deviation")

# grid sizes (h, h/2) for the oracle routes
_HERMITIAN_GRID_POINTS = 4001
_COMPLEX_GRID_POINTS = 601

_SPEC_FLAGS = {"variant": "variant", "m": "mass", "alpha": "alpha", "v1": "V1", "v2": "V2",
               "A": "A", "B": "B", "C": "C", "origin_shift": "origin_shift"}


class ConfigError(ValueError):
    """Invalid user configuration; the message names the offending field."""


# -- configuration -----------------------------------------------------------

def _load_config(args) -> dict:
    config: dict = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"config: cannot read {args.config}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: invalid JSON in {args.config}: {exc}") from None
        if not isinstance(config, dict):
            raise ConfigError("config: top level must be a JSON object")
    for flag, key in _SPEC_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            config[key] = value
    if getattr(args, "output_dir", None):
        config["output_dir"] = args.output_dir
    return config


def _parse_number(key: str, value):
    if isinstance(value, (list, tuple)):
        return value
    if isinstance(value, str):
        try:
            return complex(value.replace(" ", "").replace("i", "j"))
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {value!r} as a number") from None
    return value


def spec_from_config(config: dict) -> PotentialSpec:
    """Build a :class:`PotentialSpec`; errors are :class:`ConfigError` naming the field."""
    data = {k: v for k, v in config.items() if k not in ("grid", "tolerances", "output_dir",
                                                           "backend", "convention")}
    if "variant" not in data:
        raise ConfigError("variant: missing (use --variant or the config file)")
    for key in ("V1", "V2"):
        if key in data:
            data[key] = _parse_number(key, data[key])
    for key in ("A", "B", "C", "alpha", "mass", "origin_shift"):
        if key in data and isinstance(data[key], str):
            try:
                data[key] = float(data[key])
            except ValueError:
                raise ConfigError(f"{key}: cannot parse {data[key]!r} as a real number") from None
    try:
        return PotentialSpec.from_dict(data)
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None


def _tolerances(config: dict) -> dict:
    tol = dict(DEFAULT_TOLERANCES)
    for key, value in (config.get("tolerances") or {}).items():
        if key not in tol:
            raise ConfigError(f"tolerances.{key}: unknown tolerance")
        try:
            tol[key] = float(value)
        except (TypeError, ValueError):
            raise ConfigError(f"tolerances.{key}: expected a number") from None
        if not tol[key] > 0:
            raise ConfigError(f"tolerances.{key}: must be > 0")
    return tol


def _output_dir(config: dict) -> Path:
    path = Path(config.get("output_dir") or os.environ.get("MORSE_DK_OUTPUT_DIR")
                or DEFAULT_OUTPUT_DIR)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _pair(z) -> list[float] | None:
    if z is None:
        return None
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _dump_json(obj, path: Path) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"
    path.write_text(text)
    return text


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _map(func, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


def _floats(text: str, name: str) -> list[float]:
    try:
        return [float(t) for t in str(text).split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"{name}: expected a comma-separated list of numbers, got {text!r}") from None


# -- spectrum ----------------------------------------------------------------

def cmd_spectrum(args) -> int:
    config = _load_config(args)
    spec = spec_from_config(config)
    try:
        backend = Backend.parse(args.backend or config.get("backend", "pole"))
        conv_text = args.convention or config.get("convention")
        convention = Convention.parse(conv_text) if conv_text else None
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    result = analytic.spectrum(spec, backend, convention)
    out = _output_dir(config)
    stem = f"spectrum_{spec.variant.value}_{result.backend.value}"
    payload = {"schema": "spectrum_result.v1", "spec": spec.to_dict(), **result.to_dict()}
    _dump_json(payload, out / f"{stem}.json")
    text = _csv_text(result.CSV_HEADER, result.csv_rows())
    (out / f"{stem}.csv").write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _safe_residual(spec, E, n, backend, convention, grid):
    try:
        def psi(x):
            return analytic.wavefunction(spec, n, backend, convention, point=x)
        with np.errstate(all="ignore"):
            return _finite_or_none(oracle.residual(spec, E, psi, grid))
    except (ValueError, FloatingPointError, OverflowError):
        return None


def _oracle_energies(spec: PotentialSpec, k: int, grid_cfg: dict, jobs: int):
    """Richardson-extrapolated oracle levels; ``(energies, accepted, meta)``."""
    if spec.variant is Variant.HERMITIAN:
        n_coarse = int(grid_cfg.get("n_points", _HERMITIAN_GRID_POINTS))
        stencil = oracle.Stencil(grid_cfg.get("stencil", oracle.Stencil.THREE_POINT.value))
    else:
        n_coarse = int(grid_cfg.get("n_points", _COMPLEX_GRID_POINTS))
        stencil = oracle.Stencil(grid_cfg.get("stencil", oracle.Stencil.FIVE_POINT.value))
    base = oracle.default_grid(spec, n_coarse)
    coarse = oracle.Grid(float(grid_cfg.get("x_min", base.x_min)),
                         float(grid_cfg.get("x_max", base.x_max)), n_coarse)
    fine = coarse.refined(2)
    results = _map(lambda g: oracle.eigen_bound_states(spec, g, k, stencil), [coarse, fine], jobs)
    energies = oracle.richardson_extrapolate(results[0].energies, results[1].energies,
                                             stencil.order)
    accepted = results[0].accepted & results[1].accepted
    meta = {"coarse": coarse.to_dict(), "fine": fine.to_dict(), "stencil": stencil.value,
            "route": results[1].route, "richardson_order": stencil.order}
    return energies, accepted, meta


def build_report(spec: PotentialSpec, config: dict, jobs: int = 1) -> tuple[dict, int]:
    """Assemble the verification report and its exit code."""
    tol = _tolerances(config)
    grid_cfg = dict(config.get("grid") or {})
    printed = analytic.spectrum(spec, Backend.PAPER_LITERAL)
    pole = analytic.spectrum(spec, Backend.POLE)
    residual_grid = oracle.default_grid(spec)

    oracle_levels: dict[int, complex] = {}
    oracle_status = "absent"
    oracle_meta = None
    oracle_count = None
    if not spec.complexified:
        k = max(printed.n_max, pole.n_max, 0) + 2
        try:
            energies, accepted, oracle_meta = _oracle_energies(spec, k, grid_cfg, jobs)
            oracle_status = "ok"
            # a state is confirmed when it is bound (below the continuum) and
            # decays before reaching either wall
            confirmed = [n for n, (e, ok) in enumerate(zip(energies, accepted))
                         if ok and e.real < 0]
            oracle_count = len(confirmed)
            oracle_levels = {n: complex(energies[n]) for n in confirmed}
        except (ConvergenceError, np.linalg.LinAlgError) as exc:
            oracle_status = f"not-converged: {exc}"

    n_rows = max(printed.n_max, pole.n_max, (oracle_count or 0) - 1) + 1
    printed_map = dict(printed.levels)
    pole_map = dict(pole.levels)
    rows = []
    failures = []
    for n in range(n_rows):
        e_printed = printed_map.get(n)
        e_pole = pole_map.get(n)
        e_oracle = oracle_levels.get(n)
        row = {
            "n": n,
            "E_paper_literal": _pair(e_printed),
            "E_pole_condition": _pair(e_pole),
            "E_oracle": _pair(e_oracle),
            "residual_paper": None if e_printed is None else _safe_residual(
                spec, e_printed, n, Backend.PAPER_LITERAL, None, residual_grid),
            "residual_pole": None if e_pole is None else _safe_residual(
                spec, e_pole, n, Backend.POLE, None, residual_grid),
            "abs_gap_pole_vs_oracle": (None if e_pole is None or e_oracle is None
                                       else abs(e_pole - e_oracle)),
            "abs_gap_paper_vs_oracle": (None if e_printed is None or e_oracle is None
                                        else abs(e_printed - e_oracle)),
            "oracle_status": oracle_status if oracle_status != "ok" else (
                "confirmed" if e_oracle is not None else "unconfirmed"),
        }
        if e_pole is not None:
            ok = row["residual_pole"] is not None and row["residual_pole"] < tol["residual"]
            if oracle_status == "ok":
                ok = ok and row["abs_gap_pole_vs_oracle"] is not None \
                    and row["abs_gap_pole_vs_oracle"] < tol["energy"]
            row["pole_within_tolerance"] = bool(ok)
            if not ok:
                failures.append(n)
        else:
            row["pole_within_tolerance"] = None
        rows.append(row)
    rows.sort(key=lambda r: (spec.variant.value, r["n"]))

    probe = np.linspace(-2 * math.pi / spec.alpha, 2 * math.pi / spec.alpha, 801)
    is_pt, dev = check_pt_symmetry(spec, probe)
    report = {
        "schema": "verification_report.v1",
        "spec_echo": spec.to_dict(),
        "per_level": rows,
        "level_counts": {
            "paper_literal": printed.n_max + 1,
            "pole_condition": pole.n_max + 1,
            "oracle_confirmed": oracle_count,
        },
        "bound_condition": {
            "paper_literal": _pair(printed.bound_condition_value),
            "pole_condition": _pair(pole.bound_condition_value),
        },
        "pt_check": {"is_pt": bool(is_pt), "max_deviation": float(dev)},
        "summary": {
            "pole_rows_within_tolerance": not failures,
            "failing_pole_levels": failures,
            "oracle_status": oracle_status,
        },
        "metadata": {
            "grid": {"residual": residual_grid.to_dict(), "oracle": oracle_meta},
            "stencil": {"residual": oracle.Stencil.FIVE_POINT.value,
                        "oracle": None if oracle_meta is None else oracle_meta["stencil"]},
            "tolerances": tol,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "version": __version__,
        },
    }
    if oracle_status.startswith("not-converged"):
        code = EXIT_NONCONVERGENCE
    elif failures:
        code = EXIT_TOLERANCE
    else:
        code = EXIT_OK
    return report, code


def cmd_verify(args) -> int:
    config = _load_config(args)
    spec = spec_from_config(config)
    report, code = build_report(spec, config, jobs=args.jobs)
    out = _output_dir(config)
    path = out / f"verification_{spec.variant.value}.json"
    _dump_json(report, path)
    counts = report["level_counts"]
    print(f"report: {path}")
    print(f"levels: paper-literal {counts['paper_literal']}, pole {counts['pole_condition']}, "
          f"oracle {counts['oracle_confirmed']}")
    for row in report["per_level"]:
        gap = row["abs_gap_pole_vs_oracle"]
        res = row["residual_pole"]
        print(f"  n={row['n']}: pole={row['E_pole_condition']} oracle={row['E_oracle']} "
              f"gap={'-' if gap is None else f'{gap:.2e}'} "
              f"residual={'-' if res is None else f'{res:.2e}'}")
    print(f"exit code {code}")
    return code


# -- kernel ------------------------------------------------------------------

def kernel_rows(methods, taus, M, omega, nu, u_a, u_b, n_trunc=80, n_slices=256, jobs=1):
    """Rows ``(tau, u_a, u_b, re K, im K, method)`` sorted by (method, tau)."""
    known = {"closed", "spectral", "sliced"}
    for m in methods:
        if m not in known:
            raise ConfigError(f"method: unknown value {m!r}; expected some of {sorted(known)}")

    def evaluate(item):
        method, tau = item
        p = propagator.KernelParams.euclidean(M, omega, nu, u_a, u_b, tau)
        if method == "closed":
            value = propagator.kernel_closed(p)
        elif method == "spectral":
            value = propagator.kernel_spectral(p, n_trunc)
        else:
            eff = EffectiveOscillator(M, omega, 0.0)
            value = propagator.kernel_sliced(eff, -nu * nu / (2 * M), u_a, u_b, tau, n_slices)
        value = complex(value)
        return (tau, u_a, u_b, value.real, value.imag, method)

    items = sorted((m, t) for m in methods for t in taus)
    rows = _map(evaluate, items, jobs)
    return sorted(rows, key=lambda r: (r[5], r[0]))


def cmd_kernel(args) -> int:
    config = _load_config(args)
    methods = [m.strip() for m in args.method.split(",") if m.strip()]
    taus = _floats(args.tau, "tau")
    try:
        rows = kernel_rows(methods, taus, args.M, args.omega, args.nu, args.ua, args.ub,
                           args.n_trunc, args.slices, args.jobs)
    except propagator.CausticError as exc:
        raise ConfigError(f"tau: {exc}") from None
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    text = _csv_text(KERNEL_CSV_HEADER, [[repr(float(v)) if isinstance(v, float) else v
                                          for v in r] for r in rows])
    out = _output_dir(config)
    (out / "kernel.csv").write_text(text)
    sys.stdout.write(text)
    by_tau: dict[float, dict[str, float]] = {}
    for tau, _, _, re, _, method in rows:
        by_tau.setdefault(tau, {})[method] = re
    for tau, vals in sorted(by_tau.items()):
        if len(vals) > 1:
            gap = max(vals.values()) - min(vals.values())
            print(f"# tau={tau:g}: max pairwise gap {gap:.3e}", file=sys.stderr)
    return EXIT_OK


# -- hille-hardy -------------------------------------------------------------

#: 12-point (t, x, y, a) lattice used for the identity check
HILLE_HARDY_LATTICE = tuple(
    (t, x, y, a)
    for t in (0.1, 0.3, 0.5)
    for (x, y) in ((0.7, 1.1), (2.0, 0.4))
    for a in (0.5, 1.5)
)


def hille_hardy_rows(points, n_trunc: int) -> list[tuple]:
    rows = []
    for t, x, y, a in points:
        closed, series = specfun.hille_hardy_pair(t, x, y, a, n_trunc)
        printed = specfun.hille_hardy_printed(t, x, y, a)
        rows.append((t, x, y, a, n_trunc, closed.real, closed.imag, series.real, series.imag,
                     abs(closed - series), printed.real, printed.imag, abs(printed - closed)))
    return rows


def cmd_hille_hardy(args) -> int:
    config = _load_config(args)
    if args.lattice:
        points = HILLE_HARDY_LATTICE
    else:
        points = [(args.t, args.x, args.y, args.a)]
    try:
        rows = hille_hardy_rows(points, args.n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    text = _csv_text(HILLE_HARDY_CSV_HEADER,
                     [[v if isinstance(v, int) else repr(float(v)) for v in r] for r in rows])
    (_output_dir(config) / "hille_hardy.csv").write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


# -- pt-check ----------------------------------------------------------------

def cmd_pt_check(args) -> int:
    config = _load_config(args)
    spec = spec_from_config(config)
    probe = np.linspace(-2 * math.pi / spec.alpha, 2 * math.pi / spec.alpha, 801)
    is_pt, dev = check_pt_symmetry(spec, probe)
    print(json.dumps({"is_pt": bool(is_pt), "max_deviation": float(dev)}, sort_keys=True))
    return EXIT_OK


# -- realness sweep ----------------------------------------------------------

def realness_sweep(n_draws: int = 50, seed: int = 0, mass: float = 0.5, jobs: int = 1) -> dict:
    """Imaginary parts of printed nonpt-a levels over random ``(A, B, C)`` draws.

    ``A ~ U(0.5, 2)``, ``B ~ U(0.05, 1)``, ``C ~ U(0.5, 4)``.  For each draw
    the printed-formula levels and the pole-condition levels are recorded.
    """
    rng = np.random.default_rng(seed)
    params = [(float(a), float(b), float(c)) for a, b, c in zip(
        rng.uniform(0.5, 2.0, n_draws), rng.uniform(0.05, 1.0, n_draws),
        rng.uniform(0.5, 4.0, n_draws))]

    def one(item):
        i, (A, B, C) = item
        spec = PotentialSpec.nonpt_a(A, B, C, mass=mass)
        printed = analytic.spectrum(spec, Backend.PAPER_LITERAL)
        pole = analytic.spectrum(spec, Backend.POLE)
        im_printed = [float(e.imag) for e in printed.energies]
        im_pole = [float(e.imag) for e in pole.energies]
        return {
            "draw": i, "A": A, "B": B, "C": C,
            "im_E_paper_literal": im_printed,
            "max_abs_im_paper_literal": max((abs(v) for v in im_printed), default=None),
            "im_E_pole_condition": im_pole,
            "max_abs_im_pole_condition": max((abs(v) for v in im_pole), default=None),
        }

    draws = sorted(_map(one, list(enumerate(params)), jobs), key=lambda d: d["draw"])

    def any_real(key):
        return any(d[key] is not None and d[key] < 1e-10 for d in draws)

    return {
        "n_draws": n_draws,
        "seed": seed,
        "threshold": 1e-10,
        "any_draw_real_paper_literal": any_real("max_abs_im_paper_literal"),
        "any_draw_real_pole_condition": any_real("max_abs_im_pole_condition"),
        "all_draws_real_pole_condition": all(
            d["max_abs_im_pole_condition"] is not None and d["max_abs_im_pole_condition"] < 1e-10
            for d in draws),
        "draws": draws,
    }


def cmd_realness_sweep(args) -> int:
    config = _load_config(args)
    result = realness_sweep(args.draws, args.seed, jobs=args.jobs)
    path = _output_dir(config) / "realness_sweep.json"
    _dump_json(result, path)
    print(json.dumps({k: v for k, v in result.items() if k != "draws"}, sort_keys=True))
    return EXIT_OK


# -- argument parsing --------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file; flags override its values")
    p.add_argument("--output-dir", help="output directory (default $MORSE_DK_OUTPUT_DIR)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for independent evaluations")


def _add_spec(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", help="hermitian, pt, nonpt-a or nonpt-b")
    p.add_argument("--m", type=float, help="particle mass")
    p.add_argument("--alpha", type=float, help="exponent rate")
    p.add_argument("--v1", help="coupling V1 (complex values as 1+2j)")
    p.add_argument("--v2", help="coupling V2 (complex values as 1+2j)")
    p.add_argument("--A", type=float, help="nonpt parameter A")
    p.add_argument("--B", type=float, help="nonpt parameter B")
    p.add_argument("--C", type=float, help="nonpt-a parameter C")
    p.add_argument("--origin-shift", dest="origin_shift", type=float, help="origin shift r0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morse-dk", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form energy levels")
    _add_spec(p)
    _add_common(p)
    p.add_argument("--backend", help="pole (default) or paper-literal")
    p.add_argument("--convention", help="rederived or paper-literal (default follows backend)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="verification report against the oracle")
    _add_spec(p)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernel", help="Euclidean kernel sweep")
    _add_common(p)
    p.add_argument("--method", default="closed,spectral,sliced")
    p.add_argument("--tau", default="1", help="comma-separated Euclidean times")
    p.add_argument("--nu", type=float, default=1.0)
    p.add_argument("--M", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--ua", type=float, default=1.0)
    p.add_argument("--ub", type=float, default=1.0)
    p.add_argument("--n-trunc", dest="n_trunc", type=int, default=80)
    p.add_argument("--slices", type=int, default=256)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("hille-hardy", help="Laguerre generating function residuals")
    _add_common(p)
    p.add_argument("--t", type=float, default=0.3)
    p.add_argument("--x", type=float, default=0.7)
    p.add_argument("--y", type=float, default=1.1)
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--n", type=int, default=60, help="series truncation")
    p.add_argument("--lattice", action="store_true", help="use the built-in 12-point lattice")
    p.set_defaults(func=cmd_hille_hardy)

    p = sub.add_parser("pt-check", help="PT-symmetry verdict")
    _add_spec(p)
    _add_common(p)
    p.set_defaults(func=cmd_pt_check)

    p = sub.add_parser("realness-sweep", help="imaginary parts of printed complex-Morse levels")
    _add_common(p)
    p.add_argument("--draws", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_realness_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: jobs: must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
