"""Job configuration parsing and assembly of the JSON-ready report sections."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import FiniteAbelianGroup
from .complexity import picard
from .cyclotomic import CycInt
from .ihara import artin_check, class_number_check, special_value_check
from .iwasawa import (
    aggregate_check,
    all_char_factors,
    factorization_check,
    galois_orbits_for,
    criteria_checks,
    iwasawa_series,
    local_field_for,
    orbit_cross_check,
    quick_criteria,
    tower_report,
)
from .multigraph import Multigraph, build_cayley, validate_base
from .voltage import VoltageDatum, derived_graph, tower_connected, validate_voltage

CHECK_NAMES = (
    "factorization",
    "aggregate",
    "orbit",
    "unit_constant",
    "trivial_character",
    "singleton",
    "class_number",
    "artin",
    "special_value",
)


class ConfigError(ValueError):
    """The job file is unreadable or does not match the documented shape."""


@dataclass(frozen=True)
class JobConfig:
    ell: int
    group: tuple[int, ...]
    gens: tuple[tuple[int, ...], ...]
    beta: tuple[int, ...]
    precision: int = 32
    tower_depth: int = 3
    checks: tuple[str, ...] = CHECK_NAMES

    def datum(self) -> VoltageDatum:
        return VoltageDatum(FiniteAbelianGroup(self.group), self.gens, self.beta, self.ell)


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{what} must be an integer, got {value!r}")
    return value


def parse_config(text: str) -> JobConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError("the job file must hold a JSON object")
    known = {"ell", "group", "gens", "beta", "precision", "tower_depth", "checks"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown keys: {sorted(unknown)}")
    missing = {"ell", "group", "gens", "beta"} - set(raw)
    if missing:
        raise ConfigError(f"missing keys: {sorted(missing)}")
    ell = _int(raw["ell"], "ell")
    if not isinstance(raw["group"], list) or not raw["group"]:
        raise ConfigError("group must be a nonempty list of cyclic orders")
    group = tuple(_int(n, "group order") for n in raw["group"])
    if any(n < 1 for n in group):
        raise ConfigError("cyclic orders must be positive")
    gens = []
    for g in raw["gens"] if isinstance(raw["gens"], list) else [None]:
        if isinstance(g, int) and not isinstance(g, bool) and len(group) == 1:
            g = [g]
        if not isinstance(g, list) or len(g) != len(group):
            raise ConfigError(f"generator {g!r} must be an exponent vector of length {len(group)}")
        gens.append(tuple(_int(x, "generator entry") for x in g))
    if not isinstance(raw["beta"], list):
        raise ConfigError("beta must be a list of integers")
    beta = tuple(_int(b, "beta value") for b in raw["beta"])
    if len(beta) != len(gens):
        raise ConfigError(f"{len(gens)} generators but {len(beta)} beta values")
    precision = _int(raw.get("precision", 32), "precision")
    depth = _int(raw.get("tower_depth", 3), "tower_depth")
    checks = raw.get("checks", list(CHECK_NAMES))
    if not isinstance(checks, list) or any(c not in CHECK_NAMES for c in checks):
        raise ConfigError(f"checks must be a list drawn from {list(CHECK_NAMES)}")
    return JobConfig(ell, group, tuple(gens), beta, precision, depth, tuple(checks))


def _s(n: int) -> str:
    return str(n)


def _cyc(z) -> list[str]:
    return [str(c) for c in z.c] if isinstance(z, CycInt) else [str(z)]


def base_section(cfg: JobConfig, X: Multigraph) -> dict:
    rep = validate_base(X)
    G = FiniteAbelianGroup(cfg.group)
    out = {
        "group": list(cfg.group),
        "order": G.order,
        "exponent": G.exponent,
        "gens": [list(g) for g in cfg.gens],
        "vertices": X.vertex_count,
        "undirected_edges": X.undirected_edge_count,
        "degree": min(X.degrees),
        "connected": rep.connected,
        "euler_characteristic": rep.euler_characteristic,
        "betti": list(rep.betti),
        "assumption_ok": rep.assumption_ok,
        "failures": rep.failures(),
    }
    if rep.connected:
        pic = picard(X)
        out["kappa"] = _s(pic.kappa)
        out["picard_invariant_factors"] = [_s(d) for d in pic.invariant_factors]
    return out


def voltage_section(d: VoltageDatum, X: Multigraph) -> dict:
    rep = validate_voltage(d, strict=False)
    return {
        "ell": d.ell,
        "beta": list(d.beta),
        "m_beta": d.m_beta,
        "antisymmetric": rep.antisymmetric,
        "surjective": rep.generates_Zl,
        "walk_condition": rep.walk_condition,
        "witness": [list(h) for h in rep.witness] if rep.witness else None,
        "coprime_order_shortcut": [list(rep.shortcut[0]), rep.shortcut[1]] if rep.shortcut else None,
        "tower_connected": tower_connected(X, d),
        "failures": rep.failures,
    }


def validation(cfg: JobConfig) -> tuple[dict, bool]:
    """Everything the validate subcommand reports, plus overall success."""
    d = cfg.datum()
    X = build_cayley(d.group, d.gens)
    base = base_section(cfg, X)
    volt = voltage_section(d, X)
    ok = base["assumption_ok"] and not volt["failures"] and volt["tower_connected"]
    return {"base": base, "voltage": volt}, ok


def full_report(cfg: JobConfig, with_tower: bool = True, depth: int | None = None) -> dict:
    d = cfg.datum()
    validate_voltage(d)
    X = build_cayley(d.group, d.gens)
    out = {"base": base_section(cfg, X), "voltage": voltage_section(d, X)}
    res = iwasawa_series(X, d, cfg.precision)
    L = local_field_for(d, cfg.precision)
    cfs = all_char_factors(d, L)
    orbits = galois_orbits_for(d)
    orbit_index = {psi.exponents: k for k, orbit in enumerate(orbits.orbits) for psi in orbit}
    qc = quick_criteria(d, L)

    tower = None
    if with_tower:
        tr = tower_report(X, d, cfg.tower_depth if depth is None else depth, res)
        tower = {
            "rows": [{"n": r.n, "vertices": r.vertices, "e_n": r.e_n, "nu_n": r.nu_n} for r in tr.rows],
            "nu": tr.nu,
            "n0": tr.n0,
        }

    out["iwasawa"] = {
        "det": {"low": res.det.low, "coeffs": [_s(c) for c in res.det.coeffs]},
        "F": [_s(c) for c in res.F.coeffs],
        "shift": res.shift,
        "mu": res.mu,
        "lambda": res.lam,
        "nu": res.nu,
        "n0": res.n0,
        "distinguished": [_s(c) for c in res.distinguished.coeffs],
        "local_field": {"N": L.N, "e": L.e, "f": L.f, "precision": L.precision},
        "decomposition_group": list(orbits.decomposition_subgroup),
    }
    out["characters"] = [
        {
            "exponents": list(cf.psi.exponents),
            "a": [_cyc(c) for c in cf.a],
            "P": [_cyc(c) for c in cf.P],
            "mu": cf.mu_psi,
            "lambda": cf.lambda_psi,
            "orbit": orbit_index[cf.psi.exponents],
        }
        for cf in sorted(cfs, key=lambda cf: cf.psi.exponents)
    ]
    out["criteria"] = {
        "unit_constant_predicted": {",".join(map(str, k)): v for k, v in sorted(qc.unit_constant.items())},
        "half_square_sum_unit": qc.trivial_square_sum_unit,
        "literal_square_sum_unit": qc.literal_square_sum_unit,
        "singleton_index": qc.singleton_index,
        "literal_singleton_index": qc.literal_singleton_index,
        "readings_disagree": qc.readings_disagree,
    }

    checks = {}
    wanted = set(cfg.checks)
    if "factorization" in wanted:
        checks["factorization"] = factorization_check(X, d, res.det)
    if "aggregate" in wanted:
        checks["aggregate"] = aggregate_check(res, cfs, L.e)
    if "orbit" in wanted:
        checks["orbit"] = orbit_cross_check(d, orbits, cfs, L.e).ok
    crit = criteria_checks(res, cfs, qc, d)
    for name in ("unit_constant", "trivial_character", "singleton"):
        if name in wanted:
            checks[name] = crit[name]
    if "class_number" in wanted:
        checks["class_number"] = class_number_check(X)
    if "artin" in wanted:
        checks["artin"] = artin_check(X, d, 1)
    if "special_value" in wanted:
        checks["special_value"] = special_value_check(X, d, 1)
    out["checks"] = checks
    out["tower"] = tower
    return out


def to_dot(cfg: JobConfig, level: int) -> str:
    d = cfg.datum()
    X = build_cayley(d.group, d.gens)
    Xn = derived_graph(X, d, level)
    names = [f"v{v}_s{s}" for v, s in Xn.labels]
    lines = [f"graph X{level} {{"]
    lines += [f"  {name};" for name in names]
    for e in Xn.undirected_representatives:
        o, t = Xn.edges[e]
        lines.append(f"  {names[o]} -- {names[t]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
