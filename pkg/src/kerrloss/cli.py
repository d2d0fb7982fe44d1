"""Configuration-driven scenario runner.

Configs are flat ``key = value`` text files (``#`` starts a comment).
Complex values are ``re,im`` pairs; time grids are ``start:stop:n`` or a
comma list; ``panel`` lines may repeat (``label:gamma1,gamma2,gamma12``).
Outputs are CSV files (17-significant-digit floats, LF endings) plus a
``manifest.json`` echoing the config and the validation summary.

Wigner/Q CSVs carry the header ``re,im,value`` row-major over the grid;
time series use ``t,value``; comparison runs ``t,max_abs_diff,trace_defect``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, _kernels
from .analytic import KerrLossParams, evolve_exact, purity_exact
from .correlated import (conditioned_cat, negativity_trace, rotate_state,
                         rotation_frame)
from .errors import ConfigError, KerrLossError
from .fock import (FockCutoff, SingleModeDensity, TwoModeDensity,
                   coherent_density, tensor_product, validate)
from .lindblad import (JumpTerm, LindbladGenerator, build_cross_kerr_generator,
                       destroy_op, integrate, mode_op)
from .observables import (PhaseSpaceGrid, ScalarField, bs_half_loss_wigner,
                          min_wigner, project_quadrature, wigner)

SCENARIOS = {
    "exact-vs-oracle": "closed-form state vs brute-force integration, max "
                       "element difference per time sample",
    "purity-scan": "closed-form purity over a time grid",
    "generation-vs-propagation-loss": "crescent state with in-process loss "
                                      "vs 50% post-generation loss",
    "conditioned-cat": "Wigner panels of the detector-conditioned rotated "
                       "mode",
    "correlated-vs-uncorrelated": "correlated generator vs rotate-diagonal-"
                                  "rotate-back equivalence",
    "beamsplit-decoherence": "negativity growth from a common reservoir",
    "crescent-state": "lossless cross-Kerr plus quadrature conditioning",
}

_REQUIRED = {
    "exact-vs-oracle": ("alpha1", "alpha2", "t_samples", "cutoff"),
    "purity-scan": ("alpha1", "alpha2", "t_samples"),
    "generation-vs-propagation-loss": ("alpha1", "alpha2", "chi", "t",
                                       "gamma1", "cutoff", "grid"),
    "conditioned-cat": ("alpha1", "alpha2", "chi", "t", "cutoff", "grid"),
    "correlated-vs-uncorrelated": ("alpha1", "alpha2", "t_samples", "cutoff"),
    "beamsplit-decoherence": ("g1", "g2", "gamma_bar", "t_samples"),
    "crescent-state": ("alpha1", "alpha2", "chi", "t", "cutoff", "grid"),
}

_GRID_KEYS = ("re_min", "re_max", "im_min", "im_max", "n_re", "n_im")
_FLOAT_KEYS = ("chi", "gamma1", "gamma2", "gamma12", "d1", "d2", "d12",
               "t", "tol", "g1", "g2", "delta_w", "chi_c", "gamma_bar", "x",
               "max_abs_diff_tol", "trace_tol", "herm_tol", "positivity_tol",
               "re_min", "re_max", "im_min", "im_max")
_INT_KEYS = ("cutoff", "n_re", "n_im", "oracle_pad")


@dataclass
class ScenarioConfig:
    scenario: str
    raw: dict
    params: KerrLossParams = field(default_factory=KerrLossParams)
    alpha1: complex = 0j
    alpha2: complex = 0j
    t: float | None = None
    t_samples: np.ndarray | None = None
    cutoff: FockCutoff | None = None
    grid: PhaseSpaceGrid | None = None
    tol: float = 1e-9
    x: float = 0.0
    g1: float = 0.0
    g2: float = 0.0
    delta_w: float = 0.0
    chi_c: float = 0.0
    gamma_bar: float = 0.0
    panels: list = field(default_factory=list)
    oracle_pad: int = 2
    max_abs_diff_tol: float = 1e-6
    trace_tol: float = 1e-6
    herm_tol: float = 1e-10
    positivity_tol: float = 1e-6


@dataclass
class RunManifest:
    scenario: str
    config: dict
    version: str
    backend: str
    duration_s: float
    outputs: list
    validation: dict

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "config": self.config,
            "version": self.version,
            "backend": self.backend,
            "duration_s": self.duration_s,
            "outputs": self.outputs,
            "validation": self.validation,
        }


def _parse_complex(text: str) -> complex:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"expected 're,im', got {text!r}")


def _parse_samples(text: str) -> np.ndarray:
    if ":" in text:
        start, stop, n = text.split(":")
        return np.linspace(float(start), float(stop), int(n))
    return np.array([float(p) for p in text.split(",")])


def _parse_lines(path: Path, violations: list) -> dict:
    raw: dict = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            violations.append(f"line {lineno}: expected 'key = value'")
            continue
        key, value = (s.strip() for s in stripped.split("=", 1))
        if key == "panel":
            raw.setdefault("panel", []).append(value)
        elif key in raw:
            violations.append(f"line {lineno}: duplicate key {key!r}")
        else:
            raw[key] = value
    return raw


def validate_config(path) -> ScenarioConfig:
    """Parse and invariant-check a config; aggregates every violation."""
    path = Path(path)
    violations: list[str] = []
    raw = _parse_lines(path, violations)

    scenario = raw.get("scenario")
    if scenario is None:
        violations.append("missing required key 'scenario'")
    elif scenario not in SCENARIOS:
        violations.append(f"unknown scenario {scenario!r}")

    cfg = ScenarioConfig(scenario=scenario or "", raw=dict(raw))

    parsed: dict = {}
    for key, value in raw.items():
        try:
            if key in ("alpha1", "alpha2"):
                parsed[key] = _parse_complex(value)
            elif key == "t_samples":
                parsed[key] = _parse_samples(value)
            elif key in _INT_KEYS:
                parsed[key] = int(value)
            elif key in _FLOAT_KEYS:
                parsed[key] = float(value)
            elif key == "panel":
                panels = []
                for item in value:
                    label, rates = item.split(":", 1)
                    gs = [float(v) for v in rates.split(",")]
                    if len(gs) != 3:
                        raise ValueError("panel needs gamma1,gamma2,gamma12")
                    panels.append((label.strip(), *gs))
                parsed[key] = panels
            elif key == "scenario":
                pass
            else:
                violations.append(f"unknown key {key!r}")
        except ValueError as exc:
            violations.append(f"key {key!r}: {exc}")

    for name in ("alpha1", "alpha2", "t", "tol", "x", "g1", "g2", "delta_w",
                 "chi_c", "gamma_bar", "t_samples", "oracle_pad",
                 "max_abs_diff_tol", "trace_tol", "herm_tol",
                 "positivity_tol"):
        if name in parsed:
            setattr(cfg, name, parsed[name])
    if "panel" in parsed:
        cfg.panels = parsed["panel"]
    if "cutoff" in parsed:
        try:
            cfg.cutoff = FockCutoff(parsed["cutoff"])
        except ValueError as exc:
            violations.append(f"cutoff: {exc}")
    if any(k in parsed for k in _GRID_KEYS):
        missing = [k for k in _GRID_KEYS if k not in parsed]
        if missing:
            violations.append(f"incomplete grid, missing {missing}")
        else:
            try:
                cfg.grid = PhaseSpaceGrid(*[parsed[k] for k in _GRID_KEYS])
            except ValueError as exc:
                violations.append(f"grid: {exc}")
    try:
        cfg.params = KerrLossParams(
            chi=parsed.get("chi", 0.0),
            gamma1=parsed.get("gamma1", 0.0),
            gamma2=parsed.get("gamma2", 0.0),
            gamma12=parsed.get("gamma12", 0.0),
            d1=parsed.get("d1", 0.0),
            d2=parsed.get("d2", 0.0),
            d12=parsed.get("d12", 0.0),
        )
    except ValueError as exc:
        violations.append(str(exc))

    if scenario in _REQUIRED:
        for req in _REQUIRED[scenario]:
            if req == "grid":
                if cfg.grid is None and not any(
                        f"incomplete grid" in v for v in violations):
                    violations.append("missing grid keys "
                                      f"{', '.join(_GRID_KEYS)}")
            elif req == "cutoff":
                if cfg.cutoff is None:
                    violations.append("missing required key 'cutoff'")
            elif req not in raw:
                violations.append(f"missing required key {req!r}")
        if scenario == "beamsplit-decoherence" and cfg.t_samples is not None \
                and np.any(np.diff(cfg.t_samples) < 0):
            violations.append("t_samples must be ascending")

    if violations:
        raise ConfigError(violations)
    return cfg


# ---------------------------------------------------------------------------
# output writers
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_field_csv(path: Path, fld: ScalarField) -> None:
    lines = ["re,im,value"]
    re_ax, im_ax = fld.grid.re_axis, fld.grid.im_axis
    for i in range(fld.grid.n_re):
        for j in range(fld.grid.n_im):
            lines.append(f"{_fmt(re_ax[i])},{_fmt(im_ax[j])},"
                         f"{_fmt(fld.values[i, j])}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _write_series_csv(path: Path, t, values) -> None:
    lines = ["t,value"]
    for ti, vi in zip(t, values):
        lines.append(f"{_fmt(ti)},{_fmt(vi)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _write_compare_csv(path: Path, rows) -> None:
    lines = ["t,max_abs_diff,trace_defect"]
    for t, diff, tdef in rows:
        lines.append(f"{_fmt(t)},{_fmt(diff)},{_fmt(tdef)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _write_summary_csv(path: Path, header: str, rows) -> None:
    lines = [header]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v)
                              for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _state_validation(state, cfg: ScenarioConfig, summary: dict) -> None:
    diag = validate(state)
    summary["hermiticity_defect"] = max(
        summary.get("hermiticity_defect", 0.0), diag.hermiticity_defect)
    summary["trace_defect"] = max(
        summary.get("trace_defect", 0.0), diag.trace_defect)
    summary["min_eigenvalue"] = min(
        summary.get("min_eigenvalue", 0.0), diag.min_eigenvalue)


def _check_validation(cfg: ScenarioConfig, summary: dict) -> None:
    if summary.get("hermiticity_defect", 0.0) > cfg.herm_tol:
        raise KerrLossError("hermiticity defect exceeds tolerance")
    if summary.get("trace_defect", 0.0) > cfg.trace_tol:
        raise KerrLossError("trace defect exceeds tolerance")
    if summary.get("min_eigenvalue", 0.0) < -cfg.positivity_tol:
        raise KerrLossError("negative eigenvalue exceeds tolerance")


def _coherent_pair(cfg: ScenarioConfig) -> TwoModeDensity:
    return tensor_product(coherent_density(cfg.alpha1, cfg.cutoff),
                          coherent_density(cfg.alpha2, cfg.cutoff))


def _normalized_single(state: SingleModeDensity) -> SingleModeDensity:
    tr = np.trace(state.matrix).real
    return SingleModeDensity(state.matrix / tr, state.cutoff, normalized=True)


def _flag_coverage(fld: ScalarField) -> bool:
    return abs(fld.riemann_sum() - 1.0) < 1e-3


# ---------------------------------------------------------------------------
# scenario runners
# ---------------------------------------------------------------------------

def _run_exact_vs_oracle(cfg: ScenarioConfig, out: Path):
    # oracle runs on a padded cutoff: the truncated generator loses feed
    # into window-corner coherences, the per-element formula does not
    pad = FockCutoff(cfg.cutoff.n_max + cfg.oracle_pad)
    gen = build_cross_kerr_generator(cfg.params, pad)
    rho0 = tensor_product(coherent_density(cfg.alpha1, pad),
                          coherent_density(cfg.alpha2, pad))
    w = cfg.cutoff.dim
    rows = []
    summary: dict = {}
    for t in cfg.t_samples:
        exact = evolve_exact(cfg.alpha1, cfg.alpha2, float(t), cfg.params,
                             cfg.cutoff)
        oracle = integrate(rho0, gen, float(t), cfg.tol)
        diff = float(np.abs(exact.tensor
                            - oracle.tensor[:w, :w, :w, :w]).max())
        tdef = float(abs(np.trace(oracle.matrix).real - 1.0))
        rows.append((float(t), diff, tdef))
        _state_validation(oracle, cfg, summary)
    _write_compare_csv(out / "comparison.csv", rows)
    summary["max_abs_diff"] = max(r[1] for r in rows)
    if summary["max_abs_diff"] > cfg.max_abs_diff_tol:
        raise KerrLossError(
            f"max_abs_diff {summary['max_abs_diff']:.3e} exceeds "
            f"{cfg.max_abs_diff_tol:g}")
    return ["comparison.csv"], summary


def _run_purity_scan(cfg: ScenarioConfig, out: Path):
    values = [purity_exact(cfg.alpha1, cfg.alpha2, float(t), cfg.params)
              for t in cfg.t_samples]
    _write_series_csv(out / "purity.csv", cfg.t_samples, values)
    return ["purity.csv"], {"purity_min": min(values),
                            "purity_max": max(values)}


def _crescent_pipeline(cfg: ScenarioConfig, params: KerrLossParams):
    rho = evolve_exact(cfg.alpha1, cfg.alpha2, cfg.t, params, cfg.cutoff)
    conditioned, density = project_quadrature(rho, 2, cfg.x)
    return _normalized_single(conditioned), density


def _run_crescent(cfg: ScenarioConfig, out: Path):
    lossless = KerrLossParams(chi=cfg.params.chi)
    state, density = _crescent_pipeline(cfg, lossless)
    fld = wigner(state, cfg.grid)
    _write_field_csv(out / "crescent_wigner.csv", fld)
    mw = min_wigner(state, cfg.grid)
    _write_summary_csv(out / "summary.csv",
                       "label,min_wigner,loc_re,loc_im,prob_density",
                       [("lossless", mw.value, mw.location.real,
                         mw.location.imag, density)])
    summary: dict = {"min_wigner": mw.value,
                     "coverage": {"crescent_wigner.csv": _flag_coverage(fld)}}
    _state_validation(state, cfg, summary)
    return ["crescent_wigner.csv", "summary.csv"], summary


def _run_generation_vs_propagation(cfg: ScenarioConfig, out: Path):
    lossless = KerrLossParams(chi=cfg.params.chi)
    state0, density0 = _crescent_pipeline(cfg, lossless)
    fld0 = wigner(state0, cfg.grid)
    fld_prop = bs_half_loss_wigner(state0, cfg.grid)

    gen_params = KerrLossParams(chi=cfg.params.chi, gamma1=cfg.params.gamma1)
    state1, density1 = _crescent_pipeline(cfg, gen_params)
    fld_gen = wigner(state1, cfg.grid)

    _write_field_csv(out / "lossless_wigner.csv", fld0)
    _write_field_csv(out / "prop_loss_wigner.csv", fld_prop)
    _write_field_csv(out / "gen_loss_wigner.csv", fld_gen)

    mw0 = min_wigner(state0, cfg.grid)
    mw_gen = min_wigner(state1, cfg.grid)
    prop_min, prop_loc = fld_prop.min_location()
    rows = [
        ("lossless", mw0.value, mw0.location.real, mw0.location.imag, density0),
        ("generation_loss", mw_gen.value, mw_gen.location.real,
         mw_gen.location.imag, density1),
        ("propagation_loss", prop_min, prop_loc.real, prop_loc.imag, density0),
    ]
    _write_summary_csv(out / "summary.csv",
                       "label,min_wigner,loc_re,loc_im,prob_density", rows)
    summary: dict = {
        "min_wigner_generation_loss": mw_gen.value,
        "min_wigner_propagation_loss": prop_min,
        "coverage": {
            "lossless_wigner.csv": _flag_coverage(fld0),
            "gen_loss_wigner.csv": _flag_coverage(fld_gen),
            "prop_loss_wigner.csv": _flag_coverage(fld_prop),
        },
    }
    _state_validation(state0, cfg, summary)
    _state_validation(state1, cfg, summary)
    return (["lossless_wigner.csv", "prop_loss_wigner.csv",
             "gen_loss_wigner.csv", "summary.csv"], summary)


def _run_conditioned_cat(cfg: ScenarioConfig, out: Path):
    panels = cfg.panels or [
        ("main", cfg.params.gamma1, cfg.params.gamma2, cfg.params.gamma12)]
    outputs = []
    rows = []
    summary: dict = {"coverage": {}}
    for label, g1v, g2v, g12v in panels:
        params = KerrLossParams(chi=cfg.params.chi, gamma1=g1v, gamma2=g2v,
                                gamma12=g12v)
        state, prob = conditioned_cat(cfg.alpha1, cfg.alpha2, cfg.t, params,
                                      cfg.cutoff)
        fld = wigner(state, cfg.grid)
        name = f"wigner_{label}.csv"
        _write_field_csv(out / name, fld)
        outputs.append(name)
        mw = min_wigner(state, cfg.grid)
        rows.append((label, mw.value, mw.location.real, mw.location.imag,
                     prob))
        summary["coverage"][name] = _flag_coverage(fld)
        _state_validation(state, cfg, summary)
    _write_summary_csv(out / "summary.csv",
                       "label,min_wigner,loc_re,loc_im,success_prob", rows)
    outputs.append("summary.csv")
    summary["min_wigner"] = {r[0]: r[1] for r in rows}
    return outputs, summary


def _run_correlated_vs_uncorrelated(cfg: ScenarioConfig, out: Path):
    chi_matrix = cfg.params.chi * np.ones((2, 2))
    sym = KerrLossParams(gamma1=cfg.params.gamma1, gamma2=cfg.params.gamma2,
                         gamma12=cfg.params.gamma12, chi_matrix=chi_matrix)
    gen_corr = build_cross_kerr_generator(sym, cfg.cutoff)
    frame = rotation_frame(cfg.params, cfg.alpha1, cfg.alpha2)
    a1 = mode_op(destroy_op(cfg.cutoff), 1, cfg.cutoff)
    a2 = mode_op(destroy_op(cfg.cutoff), 2, cfg.cutoff)
    jumps = [JumpTerm(rate, op) for rate, op in
             ((frame.gamma_bar_1, a1), (frame.gamma_bar_2, a2)) if rate > 0]
    gen_diag = LindbladGenerator(gen_corr.hamiltonian, jumps, cfg.cutoff)

    rho0 = _coherent_pair(cfg)
    rows = []
    summary: dict = {}
    for t in cfg.t_samples:
        direct = integrate(rho0, gen_corr, float(t), cfg.tol)
        rotated = rotate_state(
            integrate(rotate_state(rho0, frame.phi), gen_diag, float(t),
                      cfg.tol), -frame.phi)
        diff = float(np.abs(direct.tensor - rotated.tensor).max())
        tdef = float(abs(np.trace(direct.matrix).real - 1.0))
        rows.append((float(t), diff, tdef))
        _state_validation(direct, cfg, summary)
    _write_compare_csv(out / "comparison.csv", rows)
    summary["max_abs_diff"] = max(r[1] for r in rows)
    if summary["max_abs_diff"] > cfg.max_abs_diff_tol:
        raise KerrLossError(
            f"max_abs_diff {summary['max_abs_diff']:.3e} exceeds "
            f"{cfg.max_abs_diff_tol:g}")
    return ["comparison.csv"], summary


def _run_beamsplit(cfg: ScenarioConfig, out: Path):
    series = negativity_trace(cfg.g1, cfg.g2, cfg.delta_w, cfg.chi_c,
                              cfg.gamma_bar, cfg.t_samples)
    _write_series_csv(out / "negativity.csv", series.t, series.values)
    return ["negativity.csv"], {"negativity_final": float(series.values[-1])}


_RUNNERS = {
    "exact-vs-oracle": _run_exact_vs_oracle,
    "purity-scan": _run_purity_scan,
    "generation-vs-propagation-loss": _run_generation_vs_propagation,
    "conditioned-cat": _run_conditioned_cat,
    "correlated-vs-uncorrelated": _run_correlated_vs_uncorrelated,
    "beamsplit-decoherence": _run_beamsplit,
    "crescent-state": _run_crescent,
}


def run(cfg: ScenarioConfig, out_dir) -> RunManifest:
    """Execute one scenario; writes outputs plus manifest.json."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    outputs, summary = _RUNNERS[cfg.scenario](cfg, out)
    _check_validation(cfg, summary)
    manifest = RunManifest(
        scenario=cfg.scenario,
        config=cfg.raw,
        version=__version__,
        backend=_kernels.backend(),
        duration_s=time.perf_counter() - start,
        outputs=outputs,
        validation=summary,
    )
    for name in outputs:
        if not (out / name).exists():
            raise KerrLossError(f"declared output {name} missing")
    (out / "manifest.json").write_text(
        json.dumps(manifest.to_dict(), indent=2, default=float) + "\n",
        encoding="utf-8")
    return manifest


def _apply_overrides(cfg: ScenarioConfig, args) -> None:
    if args.cutoff is not None:
        cfg.cutoff = FockCutoff(args.cutoff)
        cfg.raw["cutoff"] = str(args.cutoff)
    if args.tol is not None:
        cfg.tol = args.tol
        cfg.raw["tol"] = repr(args.tol)


def _expand_sweep(spec: str):
    key, _, rng = spec.partition("=")
    start, stop, n = rng.split(":")
    return key.strip(), np.linspace(float(start), float(stop), int(n))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="kerrloss",
        description="cross-Kerr loss-dynamics scenario runner",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a scenario config")
    p_run.add_argument("config", type=Path)
    p_run.add_argument("--out-dir", type=Path, default=Path("."))
    p_run.add_argument("--sweep", help="key=start:stop:n, expands to "
                                       "sequential runs")
    p_run.add_argument("--cutoff", type=int)
    p_run.add_argument("--tol", type=float)

    p_val = sub.add_parser("validate", help="check a config file")
    p_val.add_argument("config", type=Path)

    sub.add_parser("list-scenarios", help="print available scenarios")

    args = parser.parse_args(argv)

    if args.command == "list-scenarios":
        for name, desc in SCENARIOS.items():
            print(f"{name}: {desc}")
        return 0

    if args.command == "validate":
        try:
            validate_config(args.config)
        except ConfigError as exc:
            for v in exc.violations:
                print(f"violation: {v}", file=sys.stderr)
            return 1
        print("ok")
        return 0

    # run
    def _one_run(cfg, out_dir):
        try:
            run(cfg, out_dir)
            return 0
        except KerrLossError as exc:
            out = Path(out_dir)
            out.mkdir(parents=True, exist_ok=True)
            record = {"error": type(exc).__name__, "message": str(exc)}
            if isinstance(exc, ConfigError):
                record["violations"] = exc.violations
            (out / "error.json").write_text(
                json.dumps(record, indent=2) + "\n", encoding="utf-8")
            print(f"error: {exc}", file=sys.stderr)
            return 1

    try:
        cfg = validate_config(args.config)
    except ConfigError as exc:
        for v in exc.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    _apply_overrides(cfg, args)

    if args.sweep:
        key, values = _expand_sweep(args.sweep)
        if key not in _FLOAT_KEYS:
            print(f"error: cannot sweep key {key!r}", file=sys.stderr)
            return 1
        status = 0
        for i, v in enumerate(values):
            sub_cfg = validate_config(args.config)
            _apply_overrides(sub_cfg, args)
            sub_cfg.raw[key] = _fmt(float(v))
            _assign_float(sub_cfg, key, float(v))
            status |= _one_run(sub_cfg, Path(args.out_dir) /
                               f"sweep_{key}_{i:03d}")
        return status
    return _one_run(cfg, args.out_dir)


def _assign_float(cfg: ScenarioConfig, key: str, value: float) -> None:
    if key in ("chi", "gamma1", "gamma2", "gamma12", "d1", "d2", "d12"):
        kwargs = {
            "chi": cfg.params.chi, "gamma1": cfg.params.gamma1,
            "gamma2": cfg.params.gamma2, "gamma12": cfg.params.gamma12,
            "d1": cfg.params.d1, "d2": cfg.params.d2, "d12": cfg.params.d12,
        }
        kwargs[key] = value
        cfg.params = KerrLossParams(**kwargs)
    elif hasattr(cfg, key):
        setattr(cfg, key, value)
    else:
        raise ConfigError([f"cannot sweep key {key!r}"])


if __name__ == "__main__":
    sys.exit(main())
