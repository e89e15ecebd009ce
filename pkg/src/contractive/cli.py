"""Command-line front end.

Subcommands::

    contractive eval      single-point moments, variance curve and relative variance
    contractive scan      1- or 2-parameter sweeps of the relative variance
    contractive compare   reference two-/three-component/Gaussian curves vs the SQL line
    contractive verify    closed-form moments against the grid oracle
    contractive optimize  multi-start search over a state family

Runs are configured by a YAML file (``--config``) with flag overrides; all
physical inputs are adimensional unless a ``dimensional`` block supplies
(mass, delta0, time) to be converted through eta_from_time.  Tables are
written as CSV (17-significant-digit floats, bit-exact round-trip) or JSON.

Exit codes: 0 success, 1 configuration error, 2 domain error,
3 verification failure.
"""
from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import yaml

from . import __version__, kernels, reference
from .dynamics import (
    ContractivityRegion,
    contractivity_region,
    curve_from_moments,
    eta_from_time,
    is_contractive,
    lambda_at,
    optimal_eta,
)
from .errors import ConfigError, ContractiveError, GridTooSmall
from .moments import cat2_moments, cat3_moments, superposition_moments, yuen_moments
from .optimize import OptimizerConfig, cat2_search_space, cat3_search_space, optimize_cat2, optimize_cat3
from .oracle import Grid, evolve_analytic, grid_moments, sample
from .states import (
    GAUSSIAN_MOMENTS,
    Cat2Params,
    Cat3Params,
    GaussianSuperposition,
    YuenParams,
    to_superposition,
)
from .table import ScanTable

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

FAMILY_PARAMS = {
    "cat2": ("kappa", "theta", "delta"),
    "cat3": ("kappa_plus", "kappa_minus", "theta_plus", "theta_minus", "delta"),
    "yuen": ("xi", "var_x"),
    "gaussian": (),
}

_REGION_CODE = {
    ContractivityRegion.NONE: 0.0,
    ContractivityRegion.REGION_I: 1.0,
    ContractivityRegion.REGION_II: 2.0,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); config errors are exit 1
        raise ConfigError(message)


# --------------------------------------------------------------------------
# configuration plumbing


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"malformed config file: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a mapping")
    return data


def _merged_params(cfg: dict, args) -> dict:
    params = dict(cfg.get("params") or {})
    for name in ("kappa", "theta", "delta", "kappa_plus", "kappa_minus",
                 "theta_plus", "theta_minus", "xi", "var_x"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    return params


def _family(cfg: dict, args) -> str:
    family = args.family or cfg.get("family")
    if not family:
        raise ConfigError("a state family is required (--family or config 'family')")
    if family not in FAMILY_PARAMS:
        raise ConfigError(f"unknown family {family!r}; choose from {sorted(FAMILY_PARAMS)}")
    return family


def _require_params(family: str, params: dict) -> dict:
    needed = FAMILY_PARAMS[family]
    missing = [n for n in needed if n not in params]
    if missing:
        raise ConfigError(f"family {family!r} needs parameters {missing}")
    extra = [n for n in params if n not in needed]
    if extra:
        raise ConfigError(f"family {family!r} does not take parameters {extra}")
    try:
        return {n: float(params[n]) for n in needed}
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"non-numeric parameter value: {exc}") from exc


def _state_moments(family: str, params: dict):
    if family == "cat2":
        return cat2_moments(Cat2Params(**params))
    if family == "cat3":
        return cat3_moments(Cat3Params(**params))
    if family == "yuen":
        return yuen_moments(YuenParams(**params))
    return GAUSSIAN_MOMENTS


def _eta_from_config(cfg: dict, args) -> float | None:
    eta = args.eta if getattr(args, "eta", None) is not None else cfg.get("eta")
    dim = cfg.get("dimensional")
    if dim:
        if eta is not None:
            raise ConfigError("give either 'eta' or a 'dimensional' block, not both")
        try:
            eta = eta_from_time(
                mass=float(dim["mass"]),
                delta0=float(dim["delta0"]),
                t=float(dim["time"]),
                hbar=float(dim.get("hbar", 1.054571817e-34)),
            )
        except KeyError as exc:
            raise ConfigError(f"dimensional block needs mass, delta0 and time: {exc}") from exc
    return None if eta is None else float(eta)


def _metadata(command: str, cfg: dict, args, **extra) -> dict:
    meta = {
        "command": command,
        "version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = cfg.get("seed")
    if seed is not None:
        meta["seed"] = int(seed)
    meta.update({k: v for k, v in extra.items() if v is not None})
    return meta


def _emit(table: ScanTable, args) -> None:
    fmt = args.format or "csv"
    if args.out:
        table.write(args.out, fmt)
    else:
        sys.stdout.write(table.to_csv() if fmt == "csv" else table.to_json())


# --------------------------------------------------------------------------
# eval


def cmd_eval(cfg: dict, args) -> int:
    family = _family(cfg, args)
    params = _require_params(family, _merged_params(cfg, args))
    eta = _eta_from_config(cfg, args)

    m = _state_moments(family, params)
    curve = curve_from_moments(m)
    eta_star, lam_min = optimal_eta(curve)
    lam = lambda_at(curve, eta) if eta is not None and eta > 0 else np.nan
    region = (
        _REGION_CODE[contractivity_region(Cat2Params(**params))]
        if family == "cat2"
        else np.nan
    )

    names = list(FAMILY_PARAMS[family])
    row = [params[n] for n in names]
    row += [
        np.nan if eta is None else eta, lam, eta_star, lam_min,
        m.mean_x, m.mean_p, m.var_x, m.var_p, m.corr_xp, m.re_xp,
        curve.a, curve.b, curve.c,
        region, 1.0 if is_contractive(m) else 0.0,
    ]
    columns = [f"param_{n}" for n in names] + [
        "eta", "lambda", "eta_star", "lambda_min",
        "mean_x", "mean_p", "var_x", "var_p", "corr_xp", "re_xp",
        "a", "b", "c", "region", "contractive",
    ]
    table = ScanTable(columns=columns, rows=np.array([row]),
                      metadata=_metadata("eval", cfg, args, family=family))
    _emit(table, args)
    return EXIT_OK


# --------------------------------------------------------------------------
# scan


SCAN_PRESETS = {
    # (family, fixed values, sweeps)
    "fig1": ("cat2", {"theta": 127.0, "delta": 0.49},
             [("eta", 0.1, 3.0, 121), ("kappa", 0.1, 6.0, 121)]),
    "fig2": ("cat2", {"theta": 0.0, "delta": 0.49},
             [("eta", 0.1, 3.0, 121), ("kappa", 0.1, 6.0, 121)]),
    "fig3": ("cat2", {"theta": 180.0, "delta": 0.49},
             [("eta", 0.1, 3.0, 121), ("kappa", 0.1, 6.0, 121)]),
    "fig4": ("cat2", {"eta": 1.105, "delta": 0.49},
             [("theta", 0.0, 360.0, 121), ("kappa", 0.05, 6.0, 120)]),
    "fig5": ("cat2", {"eta": 1.105, "theta": 127.0},
             [("kappa", 0.05, 6.0, 120), ("delta", 0.05, 2.5, 99)]),
}


def _parse_sweep_flag(text: str):
    try:
        name, spec = text.split("=", 1)
        lo, hi, count = spec.split(":")
        return name.strip(), float(lo), float(hi), int(count)
    except ValueError as exc:
        raise ConfigError(f"bad sweep spec {text!r}; expected name=lo:hi:count") from exc


def _sweeps_from_config(cfg: dict, args):
    sweeps = []
    for name, block in (cfg.get("sweep") or {}).items():
        try:
            sweeps.append((name, float(block["min"]), float(block["max"]), int(block["count"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"sweep block for {name!r} needs min/max/count: {exc}") from exc
    for text in args.sweep or []:
        sweeps.append(_parse_sweep_flag(text))
    for name, lo, hi, count in sweeps:
        if count < 2:
            raise ConfigError(f"sweep {name!r} needs count >= 2")
        if not lo < hi:
            raise ConfigError(f"sweep {name!r} needs min < max")
    if not 1 <= len(sweeps) <= 2:
        raise ConfigError("scan needs one or two swept parameters")
    return sweeps


def _lambda_grid(family: str, values: dict) -> np.ndarray:
    """Vectorized relative variance; +inf marks degenerate-norm cells."""
    eta = values["eta"]
    if family == "cat2":
        return kernels.scan_lambda_cat2(eta, values["kappa"], values["theta"], values["delta"])
    if family == "cat3":
        return kernels.scan_lambda_cat3(
            eta, values["kappa_plus"], values["kappa_minus"],
            values["theta_plus"], values["theta_minus"], values["delta"],
        )
    if family == "yuen":
        xi, var_x = values["xi"], values["var_x"]
        var_p = (1.0 + 4.0 * xi * xi) / (4.0 * var_x)
        with np.errstate(divide="ignore"):
            return np.where(eta > 0, var_x / eta - 2.0 * xi + var_p * eta, np.inf)
    with np.errstate(divide="ignore"):
        return np.where(eta > 0, 0.5 / eta + 0.5 * eta, np.inf)


def cmd_scan(cfg: dict, args) -> int:
    preset = args.preset or cfg.get("preset")
    if preset:
        if preset in ("fig6", "fig7"):
            return cmd_compare(cfg, args)
        if preset not in SCAN_PRESETS:
            raise ConfigError(f"unknown preset {preset!r}")
        family, fixed, sweeps = SCAN_PRESETS[preset]
        fixed = dict(fixed)
        fixed.update(_merged_params(cfg, args))
    else:
        family = _family(cfg, args)
        fixed = _merged_params(cfg, args)
        eta = _eta_from_config(cfg, args)
        if eta is not None:
            fixed["eta"] = eta
        sweeps = _sweeps_from_config(cfg, args)

    allowed = set(FAMILY_PARAMS[family]) | {"eta"}
    swept_names = [s[0] for s in sweeps]
    for name in swept_names:
        if name not in allowed:
            raise ConfigError(f"cannot sweep {name!r} for family {family!r}")
    needed = allowed - set(swept_names)
    missing = [n for n in needed if n not in fixed]
    if missing:
        raise ConfigError(f"scan over {family!r} needs fixed values for {missing}")

    axes = [np.linspace(lo, hi, count) for _, lo, hi, count in sweeps]
    mesh = np.meshgrid(*axes, indexing="ij")
    values = {n: float(fixed[n]) for n in needed}
    for (name, *_), grid_axis in zip(sweeps, mesh):
        values[name] = grid_axis

    lam = _lambda_grid(family, values).ravel()
    # cells at eta <= 0 are pole omissions, not degenerate-norm states
    eta_cells = np.broadcast_to(values["eta"], mesh[0].shape).ravel()
    omitted = ~np.isfinite(lam)
    degenerate = omitted & (eta_cells > 0)
    lam = np.where(omitted, np.nan, lam)

    cols = swept_names + ["lambda", "degenerate"]
    rows = np.column_stack([m.ravel() for m in mesh] + [lam, degenerate.astype(float)])
    meta = _metadata("scan", cfg, args, family=family, preset=preset)
    for name in sorted(needed):
        meta[f"fixed_{name}"] = format(values[name], ".17g")
    _emit(ScanTable(columns=cols, rows=rows, metadata=meta), args)
    return EXIT_OK


# --------------------------------------------------------------------------
# compare


def cmd_compare(cfg: dict, args) -> int:
    preset = args.preset or cfg.get("preset")
    if preset and preset not in ("fig6", "fig7"):
        raise ConfigError(f"compare supports presets fig6/fig7, not {preset!r}")
    block = cfg.get("compare") or {}
    eta_block = block.get("eta") or {}
    lo = float(eta_block.get("min", 0.0))
    hi = float(eta_block.get("max", 3.0))
    count = int(eta_block.get("count", 301))
    if count < 2 or not lo < hi or lo < 0:
        raise ConfigError("compare needs an eta range with 0 <= min < max and count >= 2")

    etas = np.linspace(lo, hi, count)
    curve2 = curve_from_moments(cat2_moments(reference.CAT2_REFERENCE))
    curve3 = curve_from_moments(cat3_moments(reference.CAT3_REFERENCE))

    def lam(curve, eta):
        return np.where(eta > 0, np.divide(curve.a, np.where(eta > 0, eta, 1.0))
                        + curve.b + curve.c * eta, np.nan)

    lam2 = lam(curve2, etas)
    lam3 = lam(curve3, etas)
    lam_g = np.where(etas > 0, 0.5 / np.where(etas > 0, etas, 1.0) + 0.5 * etas, np.nan)

    # absolute variances in units of the half component variance (D0^2/2)
    v2 = 2.0 * (curve2.a + curve2.b * etas + curve2.c * etas**2)
    v3 = 2.0 * (curve3.a + curve3.b * etas + curve3.c * etas**2)
    v_g = 1.0 + etas**2
    v_sql = 2.0 * etas

    rows = np.column_stack([etas, lam2, lam3, lam_g, v2, v3, v_g, v_sql])
    cols = ["eta", "lambda_s2", "lambda_s3", "lambda_gauss",
            "v_s2", "v_s3", "v_gauss", "v_sql"]
    meta = _metadata("compare", cfg, args, preset=args.preset)
    meta["cat2_reference"] = "kappa=2.26,theta=127,delta=0.49"
    meta["cat3_reference"] = "kappa_plus=1,kappa_minus=2.38,theta_plus=249,theta_minus=249,delta=1.21"
    meta["variance_units"] = "half component variance (D0^2/2)"
    _emit(ScanTable(columns=cols, rows=rows, metadata=meta), args)
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _draw_state(kind: str, rng: np.random.Generator):
    for _ in range(64):
        try:
            if kind == "cat2":
                p = Cat2Params(
                    kappa=float(np.exp(rng.uniform(-1.6, 1.6))),
                    theta=float(rng.uniform(0.0, 360.0)),
                    delta=float(rng.uniform(0.1, 3.0)),
                )
                return to_superposition(p), cat2_moments(p)
            if kind == "cat3":
                p = Cat3Params(
                    kappa_plus=float(np.exp(rng.uniform(-1.6, 1.6))),
                    kappa_minus=float(np.exp(rng.uniform(-1.6, 1.6))),
                    theta_plus=float(rng.uniform(0.0, 360.0)),
                    theta_minus=float(rng.uniform(0.0, 360.0)),
                    delta=float(rng.uniform(0.1, 3.0)),
                )
                return to_superposition(p), cat3_moments(p)
            centers = np.sort(rng.uniform(-3.0, 3.0, size=4))
            amps = rng.uniform(0.2, 2.0, size=4) * np.exp(2j * np.pi * rng.uniform(size=4))
            s = GaussianSuperposition(components=tuple(zip(amps, centers)))
            return s, superposition_moments(s)
        except ContractiveError:
            continue
    raise ContractiveError(f"could not draw a valid {kind} state")


def _scaled_gap(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def verify_state(state: GaussianSuperposition, m, grid: Grid,
                 eta_points: int, eta_max: float) -> tuple[float, float]:
    """(moment discrepancy, variance-curve residual) for one state."""
    s0 = sample(state, grid)
    gm = grid_moments(s0)
    moment_err = max(
        _scaled_gap(m.mean_x, gm.mean_x),
        _scaled_gap(m.mean_p, gm.mean_p),
        _scaled_gap(m.var_x, gm.var_x),
        _scaled_gap(m.var_p, gm.var_p),
        _scaled_gap(m.corr_xp, gm.corr_xp),
        _scaled_gap(m.re_xp, gm.re_xp),
    )
    curve = curve_from_moments(m)
    curve_err = 0.0
    x, dx = grid.x, grid.spacing
    for eta in np.linspace(0.0, eta_max, eta_points):
        evolved = evolve_analytic(state, float(eta), grid)
        rho = np.abs(evolved.values) ** 2
        mean = float(np.sum(x * rho) * dx)
        var = float(np.sum((x - mean) ** 2 * rho) * dx)
        expected = curve.a + curve.b * eta + curve.c * eta * eta
        curve_err = max(curve_err, _scaled_gap(var, expected))
    return moment_err, curve_err


def cmd_verify(cfg: dict, args) -> int:
    block = cfg.get("verify") or {}
    tol = float(args.tol if args.tol is not None else block.get("tol", 1e-6))
    eta_points = int(block.get("eta_points", 20))
    grid_block = cfg.get("grid") or {}
    eta_max = float(grid_block.get("eta_max", 4.0))
    n_points = int(grid_block.get("n_points", 2**14))
    forced_half_width = grid_block.get("half_width")
    if args.half_width is not None:
        forced_half_width = args.half_width

    jobs = []
    seed = None
    family = args.family or cfg.get("family")
    if family:
        family = _family(cfg, args)
        if family == "gaussian":
            state = GaussianSuperposition(components=((1.0 + 0.0j, 0.0),))
            jobs.append((state, superposition_moments(state), 1.0))
        elif family == "yuen":
            raise ConfigError("verify supports position-superposition families only")
        else:
            params = _require_params(family, _merged_params(cfg, args))
            p = Cat2Params(**params) if family == "cat2" else Cat3Params(**params)
            m = cat2_moments(p) if family == "cat2" else cat3_moments(p)
            jobs.append((to_superposition(p), m, 2.0 if family == "cat2" else 3.0))
    else:
        n_states = int(args.states if args.states is not None else block.get("states", 100))
        if n_states < 1:
            raise ConfigError("verify needs states >= 1")
        seed = int(args.seed if args.seed is not None else cfg.get("seed", 0))
        rng = np.random.default_rng(seed)
        kinds = ["cat2", "cat3", "gauss4"]
        for i in range(n_states):
            state, m = _draw_state(kinds[i % 3], rng)
            jobs.append((state, m, float(len(state.components))))

    def run(job):
        state, m, kind = job
        if forced_half_width is not None:
            grid = Grid(half_width=float(forced_half_width), n_points=n_points)
        else:
            grid = Grid.for_state(state, eta_max=eta_max, n_points=n_points)
        moment_err, curve_err = verify_state(state, m, grid, eta_points, eta_max)
        return kind, moment_err, curve_err

    threads = int(args.threads or cfg.get("threads", 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    rows = np.array(
        [[i, kind, me, ce] for i, (kind, me, ce) in enumerate(results)], dtype=float
    )
    worst = float(max(max(me, ce) for _, me, ce in results))
    meta = _metadata("verify", cfg, args, family=family)
    if seed is not None:
        meta["seed"] = seed
    meta["tol"] = format(tol, ".17g")
    meta["worst"] = format(worst, ".17g")
    table = ScanTable(
        columns=["index", "n_components", "moment_err", "curve_err"],
        rows=rows, metadata=meta,
    )
    _emit(table, args)
    if worst > tol:
        print(f"verification FAILED: worst discrepancy {worst:.3e} > tol {tol:.0e}",
              file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# --------------------------------------------------------------------------
# optimize


def _space_overrides(family: str, cfg_block: dict):
    bounds = dict(cfg_block.get("bounds") or {})
    pins = dict(cfg_block.get("pins") or {})
    kwargs = {}
    for name, pair in bounds.items():
        try:
            kwargs[name] = (float(pair[0]), float(pair[1]))
        except (TypeError, ValueError, IndexError) as exc:
            raise ConfigError(f"bad bounds for {name!r}: {exc}") from exc
    for name, val in pins.items():
        kwargs[name] = float(val)
    try:
        if family == "cat2":
            return cat2_search_space(**kwargs)
        return cat3_search_space(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"unknown search-space axis: {exc}") from exc


def cmd_optimize(cfg: dict, args) -> int:
    family = _family(cfg, args)
    if family not in ("cat2", "cat3"):
        raise ConfigError("optimize supports the cat2 and cat3 families")
    block = dict(cfg.get("optimizer") or {})
    for text in args.pin or []:
        try:
            name, val = text.split("=", 1)
            block.setdefault("pins", {})[name.strip()] = float(val)
        except ValueError as exc:
            raise ConfigError(f"bad pin spec {text!r}; expected name=value") from exc
    for text in args.bounds or []:
        try:
            name, spec = text.split("=", 1)
            lo, hi = (float(tok) for tok in spec.split(":"))
        except ValueError as exc:
            raise ConfigError(f"bad bounds spec {text!r}; expected name=lo:hi") from exc
        block.setdefault("bounds", {})[name.strip()] = [lo, hi]

    config = OptimizerConfig(
        n_starts=int(args.starts if args.starts is not None else block.get("n_starts", 256)),
        seed=int(args.seed if args.seed is not None else block.get("seed", cfg.get("seed", 0))),
        max_iter=int(block.get("max_iter", 0)),
    )
    space = _space_overrides(family, block)
    result = optimize_cat2(config, space) if family == "cat2" else optimize_cat3(config, space)

    names = ["eta"] + list(FAMILY_PARAMS[family])
    vec = dict(zip(names, result.params))
    params = {n: vec[n] for n in FAMILY_PARAMS[family]}
    m = _state_moments(family, params)
    row = list(result.params) + [
        result.lambda_min, float(result.n_evals), float(result.n_starts),
        1.0 if result.converged else 0.0, result.spread,
        1.0 if is_contractive(m) else 0.0,
    ]
    cols = names + ["lambda_min", "n_evals", "n_starts", "converged", "spread", "contractive"]
    meta = _metadata("optimize", cfg, args, family=family)
    meta["seed"] = config.seed
    _emit(ScanTable(columns=cols, rows=np.array([row]), metadata=meta), args)
    return EXIT_OK


# --------------------------------------------------------------------------
# entry point


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--config", help="YAML run configuration")
    sub.add_argument("--out", help="output file path (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), help="output format")
    sub.add_argument("--preset", help="figure preset fig1..fig7")
    sub.add_argument("--seed", type=int, help="random seed")
    sub.add_argument("--threads", type=int, help="worker threads for verify")
    sub.add_argument("--family", choices=sorted(FAMILY_PARAMS))
    for name in ("kappa", "theta", "delta", "kappa-plus", "kappa-minus",
                 "theta-plus", "theta-minus", "xi", "var-x", "eta"):
        sub.add_argument(f"--{name}", type=float, dest=name.replace("-", "_"))


def build_parser() -> _Parser:
    parser = _Parser(prog="contractive",
                     description="contractive wave-packet dynamics toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="single-point evaluation")
    p_scan = subs.add_parser("scan", help="parameter sweep")
    p_scan.add_argument("--sweep", action="append",
                        help="swept axis as name=lo:hi:count (repeatable, max 2)")
    p_cmp = subs.add_parser("compare", help="reference curves vs the SQL line")
    p_ver = subs.add_parser("verify", help="closed forms against the grid oracle")
    p_ver.add_argument("--states", type=int, help="number of random states")
    p_ver.add_argument("--tol", type=float, help="verification tolerance")
    p_ver.add_argument("--half-width", type=float, dest="half_width",
                       help="force the oracle grid half width")
    p_opt = subs.add_parser("optimize", help="multi-start search")
    p_opt.add_argument("--starts", type=int, help="number of simplex starts")
    p_opt.add_argument("--pin", action="append", help="pin an axis: name=value")
    p_opt.add_argument("--bounds", action="append", help="restrict an axis: name=lo:hi")

    for sub in (p_eval, p_scan, p_cmp, p_ver, p_opt):
        _add_common(sub)
    return parser


_DISPATCH = {
    "eval": cmd_eval,
    "scan": cmd_scan,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "optimize": cmd_optimize,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _load_config(args.config)
    return _DISPATCH[args.command](cfg, args)


def main(argv=None) -> int:
    try:
        code = run(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        code = EXIT_CONFIG
    except GridTooSmall as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    except ContractiveError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    return code


if __name__ == "__main__":
    sys.exit(main())
