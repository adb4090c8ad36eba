"""Command-line front end.

Subcommands
-----------
eval        one value of G (or the generalized function at a resonance)
grid        values on a 2-D slice through N-space, as CSV or JSON
resonances  table of resonant degrees and wavenumbers
verify      run the verification suite and emit a JSON report

Exit codes: 0 ok, 1 verification failure, 2 resonant degree, 3 invalid
input, 4 I/O failure. Every number is printed with ``repr``, the shortest
string that round-trips, so output files diff cleanly between runs.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import greens as gr
from . import medium as md
from . import verify as vf
from .errors import CoincidentPoints, FisheyeError, ResonantDegree

EXIT_OK, EXIT_VERIFY, EXIT_RESONANT, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3, 4

REPRESENTATIONS = [r.value for r in gr.Representation]
SUITE_NAME = "fisheye"


class InputError(Exception):
    """Bad flags or config; maps to exit status 3."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with the
    # resonant-degree status.
    def error(self, message):
        raise InputError(message)


@dataclass(frozen=True)
class GridSpec:
    axes: tuple            # two 0-based coordinate indices
    ranges: tuple          # ((lo, hi), (lo, hi))
    samples: tuple         # points per axis, each >= 2
    slice_values: tuple    # the other N - 2 coordinates, in index order


@dataclass(frozen=True)
class JobConfig:
    medium: md.Medium
    nu: complex | None = None
    k: complex | None = None
    resonant_n: int | None = None
    source: tuple = ()
    point: tuple | None = None
    rep: str = "auto"
    grid: GridSpec | None = None
    fmt: str = "csv"
    out: str | None = None
    seed: int = 0
    n_max: int = 5
    selection: tuple = field(default_factory=tuple)


# ------------------------------------------------------------------ parsing

def _floats(text, what):
    if isinstance(text, (list, tuple)):
        vals = text
    else:
        vals = [v for v in str(text).split(",") if v.strip()]
    try:
        return tuple(float(v) for v in vals)
    except ValueError:
        raise InputError(f"{what}: expected comma-separated numbers, got {text!r}") from None


def _complex(text, what):
    if isinstance(text, (int, float)):
        return complex(text)
    parts = _floats(text, what)
    if len(parts) not in (1, 2):
        raise InputError(f"{what}: expected RE or RE,IM, got {text!r}")
    return complex(parts[0], parts[1] if len(parts) == 2 else 0.0)


def _pick(args, cfg, key, default=None):
    """Flag value, then config-file value, then default."""
    val = getattr(args, key, None)
    if val is not None:
        return val
    val = cfg.get(key)
    return default if val is None else val


def _load_config(path):
    if path is None:
        return {}
    try:
        cfg = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise InputError("config must be a JSON object")
    # accept both flat keys and a nested "medium" block
    med = cfg.pop("medium", {}) or {}
    for key in ("dim", "rho", "n0"):
        if key in med and key not in cfg:
            cfg[key] = med[key]
    return {k.replace("-", "_"): v for k, v in cfg.items()}


def _grid(args, cfg, dim):
    g = dict(cfg.get("grid") or {})
    axes = _pick(args, {"axes": g.get("axes")}, "axes", "1,2")
    ranges = _pick(args, {"ranges": g.get("ranges")}, "ranges", "-2,2,-2,2")
    samples = _pick(args, {"samples": g.get("samples")}, "samples", "21")
    slc = _pick(args, {"slice": g.get("slice_values", g.get("slice"))}, "slice", None)

    ax = tuple(int(a) - 1 for a in _floats(axes, "--axes"))
    if len(ax) != 2 or ax[0] == ax[1] or not all(0 <= a < dim for a in ax):
        raise InputError(f"--axes must name two distinct coordinates in 1..{dim}")
    rng = _floats(np.ravel(ranges).tolist() if isinstance(ranges, list) else ranges, "--ranges")
    if len(rng) != 4 or not all(math.isfinite(v) for v in rng):
        raise InputError("--ranges needs four finite numbers: MIN1,MAX1,MIN2,MAX2")
    smp = tuple(int(v) for v in _floats(samples if not isinstance(samples, int) else [samples],
                                        "--samples"))
    if len(smp) == 1:
        smp = smp * 2
    if len(smp) != 2 or min(smp) < 2:
        raise InputError("--samples must be at least 2 per axis")
    rest = dim - 2
    sl = _floats(slc, "--slice") if slc is not None else (0.0,) * rest
    if len(sl) != rest:
        raise InputError(f"--slice needs {rest} values for the remaining coordinates")
    return GridSpec(ax, ((rng[0], rng[1]), (rng[2], rng[3])), smp, sl)


def build_config(args) -> JobConfig:
    """Merge flags over an optional JSON config; flags win."""
    cfg = _load_config(getattr(args, "config", None))
    try:
        m = md.Medium(int(_pick(args, cfg, "dim", 3)), float(_pick(args, cfg, "rho", 1.0)),
                      float(_pick(args, cfg, "n0", 1.0)))
    except (FisheyeError, ValueError) as exc:
        raise InputError(str(exc)) from None

    # a degree flag overrides every degree key in the config file
    flag_keys = [k for k in ("nu", "k", "resonant_n") if getattr(args, k, None) is not None]
    if flag_keys:
        chosen = {k: getattr(args, k) for k in flag_keys}
    else:
        chosen = {k: cfg[k] for k in ("nu", "k", "resonant_n") if cfg.get(k) is not None}
    if len(chosen) > 1:
        raise InputError("give exactly one of --nu, --k, --resonant-n")
    nu = _complex(chosen["nu"], "--nu") if "nu" in chosen else None
    k = _complex(chosen["k"], "--k") if "k" in chosen else None
    res = None
    if "resonant_n" in chosen:
        res = int(chosen["resonant_n"])
        if res < 0:
            raise InputError("--resonant-n must be non-negative")

    source = _floats(_pick(args, cfg, "source", [0.0] * m.dim), "--source")
    if len(source) != m.dim:
        raise InputError(f"--source needs {m.dim} coordinates, got {len(source)}")
    point = _pick(args, cfg, "point", None)
    if point is not None:
        point = _floats(point, "--point")
        if len(point) != m.dim:
            raise InputError(f"--point needs {m.dim} coordinates, got {len(point)}")
    rep = str(_pick(args, cfg, "rep", "auto"))
    if rep not in REPRESENTATIONS:
        raise InputError(f"--rep must be one of {', '.join(REPRESENTATIONS)}")
    command = getattr(args, "command", None)
    grid = _grid(args, cfg, m.dim) if command == "grid" else None
    fmt_default = "csv" if command in ("grid", "resonances") else "json"
    n_max = int(_pick(args, cfg, "n_max", 5))
    if n_max < 0:
        raise InputError("--n-max must be non-negative")
    return JobConfig(
        medium=m, nu=nu, k=k, resonant_n=res, source=source, point=point, rep=rep,
        grid=grid, fmt=str(_pick(args, cfg, "format", fmt_default)),
        out=_pick(args, cfg, "out", None), seed=int(_pick(args, cfg, "seed", 0)),
        n_max=n_max, selection=tuple(getattr(args, "checks", None) or cfg.get("checks", ())),
    )


# ------------------------------------------------------------- evaluation

def _num(x: float) -> str:
    return "nan" if math.isnan(x) else repr(float(x))


def _resolve(cfg: JobConfig):
    """('generalized', n) or ('green', nu); raises ResonantDegree for nu on a resonance."""
    if cfg.resonant_n is not None:
        return "generalized", cfg.resonant_n
    if cfg.k is not None:
        nu = md.nu_from_k(cfg.medium, cfg.k).nu
    elif cfg.nu is not None:
        nu = cfg.nu
    else:
        raise InputError("give one of --nu, --k, --resonant-n")
    n = md.Degree(nu).resonance(cfg.medium.dim)
    if n is not None:
        raise ResonantDegree(
            f"nu = {nu} is the resonance n = {n} for N = {cfg.medium.dim}; "
            f"rerun with --resonant-n {n} for the generalized Green's function")
    return "green", nu


def evaluate(cfg: JobConfig, kind, param, r) -> tuple[complex, list[str]]:
    """Value and sorted flag names at r, exactly as the CLI computes them."""
    if kind == "generalized":
        gv = gr.green_generalized(cfg.medium, param, r, cfg.source)
    else:
        gv = gr.green(cfg.medium, param, r, cfg.source, cfg.rep)
    return gv.value, sorted(f.value for f in gv.flags)


def eval_record(cfg: JobConfig) -> dict:
    kind, param = _resolve(cfg)
    if cfg.point is None:
        raise InputError("eval needs --point")
    value, flags = evaluate(cfg, kind, param, cfg.point)
    return {"r": list(cfg.point), "r_src": list(cfg.source),
            "chi": md.chi(cfg.medium, cfg.point, cfg.source),
            "value_re": value.real, "value_im": value.imag, "flags": flags}


def grid_records(cfg: JobConfig) -> list[dict]:
    """Row-major records over the slice, second axis fastest.

    Points where the function is undefined (the source itself) get NaN
    values and the error name as a flag instead of stopping the run.
    """
    kind, param = _resolve(cfg)
    g = cfg.grid
    a1 = np.linspace(*g.ranges[0], g.samples[0])
    a2 = np.linspace(*g.ranges[1], g.samples[1])
    others = [i for i in range(cfg.medium.dim) if i not in g.axes]
    rows = []
    for x1 in a1:
        for x2 in a2:
            r = np.zeros(cfg.medium.dim)
            r[g.axes[0]], r[g.axes[1]] = x1, x2
            r[others] = g.slice_values
            chi = md.chi(cfg.medium, r, cfg.source)
            try:
                value, flags = evaluate(cfg, kind, param, r)
            except FisheyeError as exc:
                value, flags = complex(math.nan, math.nan), [type(exc).__name__]
            rows.append({"x1": float(x1), "x2": float(x2), "chi": chi,
                         "re": value.real, "im": value.imag, "flags": flags})
    return rows


# ---------------------------------------------------------------- output

def _json_safe(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, np.generic):
        return _json_safe(obj.item())
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_json_safe(obj), indent=2, sort_keys=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        cells = []
        for h in header:
            v = row[h]
            if isinstance(v, list):
                cells.append("|".join(str(x) for x in v))
            elif isinstance(v, float):
                cells.append(_num(v))
            else:
                cells.append(str(v))
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None, stdout) -> int:
    if out is None:
        stdout.write(text)
        return EXIT_OK
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# -------------------------------------------------------------- commands

def cmd_eval(cfg: JobConfig, stdout=sys.stdout) -> int:
    rec = eval_record(cfg)
    if cfg.fmt == "json":
        return _emit(_dump_json(rec), cfg.out, stdout)
    N = cfg.medium.dim
    flat = {f"r{i + 1}": v for i, v in enumerate(rec["r"])}
    flat.update({f"src{i + 1}": v for i, v in enumerate(rec["r_src"])})
    flat.update({k: rec[k] for k in ("chi", "value_re", "value_im", "flags")})
    header = ([f"r{i + 1}" for i in range(N)] + [f"src{i + 1}" for i in range(N)]
              + ["chi", "value_re", "value_im", "flags"])
    return _emit(_csv(header, [flat]), cfg.out, stdout)


def cmd_grid(cfg: JobConfig, stdout=sys.stdout) -> int:
    rows = grid_records(cfg)
    if cfg.fmt == "json":
        return _emit(_dump_json(rows), cfg.out, stdout)
    return _emit(_csv(["x1", "x2", "chi", "re", "im", "flags"], rows), cfg.out, stdout)


def resonance_rows(m: md.Medium, n_max: int) -> list[dict]:
    return [{"n": n, "nu": nu, "k_n0_rho": k * m.n0 * m.rho}
            for n, nu, k in md.resonant_wavenumbers(m, n_max)]


def cmd_resonances(cfg: JobConfig, stdout=sys.stdout) -> int:
    rows = resonance_rows(cfg.medium, cfg.n_max)
    if cfg.fmt == "json":
        return _emit(_dump_json(rows), cfg.out, stdout)
    return _emit(_csv(["n", "nu", "k_n0_rho"], rows), cfg.out, stdout)


def verify_report(selection, seed: int) -> dict:
    outcomes = vf.run_suite(selection, seed)
    return {"suite": SUITE_NAME, "seed": seed, "checks": [o.as_dict() for o in outcomes]}


def cmd_verify(cfg: JobConfig, stdout=sys.stdout) -> int:
    try:
        report = verify_report(cfg.selection, cfg.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if cfg.fmt == "csv":
        text = _csv(["name", "passed", "measured", "tolerance"], report["checks"])
    else:
        text = _dump_json(report)
    status = _emit(text, cfg.out, stdout)
    if status != EXIT_OK:
        return status
    return EXIT_OK if all(c["passed"] for c in report["checks"]) else EXIT_VERIFY


COMMANDS = {"eval": cmd_eval, "grid": cmd_grid, "resonances": cmd_resonances, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    shared.add_argument("--dim", type=int, help="dimension N (default 3)")
    shared.add_argument("--rho", type=float, help="fish-eye radius (default 1)")
    shared.add_argument("--n0", type=float, help="index scale (default 1)")
    shared.add_argument("--out", help="output file (default stdout)")
    shared.add_argument("--format", choices=["csv", "json"])
    shared.add_argument("--seed", type=int)
    shared.add_argument("--config", help="JSON file with default values; flags override it")

    field_opts = _Parser(add_help=False)
    deg = field_opts.add_mutually_exclusive_group()
    deg.add_argument("--nu", help="degree RE[,IM]")
    deg.add_argument("--k", help="wavenumber RE[,IM]")
    deg.add_argument("--resonant-n", dest="resonant_n", type=int,
                     help="evaluate the generalized function at resonance n")
    field_opts.add_argument("--source", help="source point x1,...,xN (default origin)")
    field_opts.add_argument("--rep", choices=REPRESENTATIONS,
                            help="closed form for G (ignored with --resonant-n)")

    ap = _Parser(prog="fisheye", description="Green's functions of the Maxwell fish-eye medium.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[shared, field_opts], help="evaluate at one point")
    p.add_argument("--point", help="observation point x1,...,xN")

    p = sub.add_parser("grid", parents=[shared, field_opts], help="evaluate on a 2-D slice")
    p.add_argument("--axes", help="two 1-based coordinate indices (default 1,2)")
    p.add_argument("--ranges", help="MIN1,MAX1,MIN2,MAX2 (default -2,2,-2,2); write --ranges=-1,... "
                   "when the first value is negative")
    p.add_argument("--samples", help="points per axis, one value or two (default 21)")
    p.add_argument("--slice", help="values of the remaining N-2 coordinates (default 0)")

    p = sub.add_parser("resonances", parents=[shared], help="table of resonant degrees")
    p.add_argument("--n-max", dest="n_max", type=int, help="largest resonance index (default 5)")

    p = sub.add_parser("verify", parents=[shared], help="run the verification suite")
    p.add_argument("checks", nargs="*", help="family or check names (default all)")
    return ap


def main(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = build_config(args)
        return COMMANDS[args.command](cfg, stdout)
    except ResonantDegree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESONANT
    except CoincidentPoints as exc:
        print(f"error: CoincidentPoints: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, FisheyeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
