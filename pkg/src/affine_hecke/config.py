"""Workbench configuration: a lattice with its form b, a root datum and default truncation.

JSON schema::

    {
      "lattice": {"rank": 1, "b": [[-1]]},
      "root_datum": {"kind": "torus"} | {"kind": "simple", "cartan_type": "A1", "central_rank": 0},
      "defaults": {"trunc": 8}
    }

For a simple datum ``lattice`` is optional; the canonical form of the
Cartan type is used when it is missing.  Every violated invariant is
reported, each echoing the offending matrix.
"""
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .affine_weyl import RootDatum, canonical_form, parse_cartan_type
from .errors import ConfigError, HeckeError
from .heisenberg import HeisenbergGroup
from .lattice_forms import EvenSymmetricForm, IntegerBilinearForm, b_from_q, derive_q, is_negative_definite

DEFAULT_TRUNC = 8
PRESETS = ("rank1_torus", "rank2_torus", "a1", "a2")


@dataclass(frozen=True)
class WorkbenchConfig:
    b: IntegerBilinearForm
    q: EvenSymmetricForm
    root_datum: RootDatum
    trunc: int = DEFAULT_TRUNC
    source: str = "<dict>"

    @property
    def rank(self):
        return self.q.rank

    @property
    def group(self) -> HeisenbergGroup:
        return HeisenbergGroup(self.b)


def _int_matrix(value, name, problems):
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        problems.append(f"{name} must be a list of rows, got {value!r}")
        return None
    if not all(isinstance(x, int) and not isinstance(x, bool) for row in value for x in row):
        problems.append(f"{name}={value} must have integer entries")
        return None
    if any(len(row) != len(value) for row in value):
        problems.append(f"{name}={value} must be square")
        return None
    return value


def config_from_dict(data, source="<dict>") -> WorkbenchConfig:
    problems = []
    if not isinstance(data, dict):
        raise ConfigError([f"top level must be an object, got {type(data).__name__}"])
    unknown = set(data) - {"lattice", "root_datum", "defaults"}
    if unknown:
        problems.append(f"unknown top-level keys {sorted(unknown)}")
    rd_spec = data.get("root_datum", {"kind": "torus"})
    kind = rd_spec.get("kind") if isinstance(rd_spec, dict) else None
    if kind not in ("torus", "simple"):
        problems.append(f"root_datum.kind must be 'torus' or 'simple', got {kind!r}")
    lattice = data.get("lattice")
    b_rows = None
    if lattice is None:
        if kind != "simple":
            problems.append("lattice section is required for a torus")
    elif not isinstance(lattice, dict) or "b" not in lattice:
        problems.append("lattice must be an object with key 'b'")
    else:
        b_rows = _int_matrix(lattice["b"], "lattice.b", problems)
        rank = lattice.get("rank")
        if b_rows is not None and rank is not None and rank != len(b_rows):
            problems.append(f"lattice.rank={rank} but b={lattice['b']} has size {len(b_rows)}")
    defaults = data.get("defaults", {})
    trunc = defaults.get("trunc", DEFAULT_TRUNC) if isinstance(defaults, dict) else None
    if not isinstance(trunc, int) or isinstance(trunc, bool):
        problems.append(f"defaults.trunc must be an integer, got {trunc!r}")
    cartan = None
    central = 0
    if kind == "simple":
        ctype = rd_spec.get("cartan_type")
        central = rd_spec.get("central_rank", 0)
        if not isinstance(central, int) or central < 0:
            problems.append(f"root_datum.central_rank must be a nonnegative integer, got {central!r}")
            central = 0
        if not isinstance(ctype, str):
            problems.append("root_datum.cartan_type is required for kind 'simple'")
        else:
            try:
                cartan, _ = parse_cartan_type(ctype)
            except ConfigError as exc:
                problems.extend(exc.violations)
    if problems:
        raise ConfigError(problems)

    if b_rows is None:
        try:
            q = canonical_form(cartan, central)
        except ConfigError as exc:
            raise ConfigError(exc.violations)
        b = b_from_q(q)
    else:
        b = IntegerBilinearForm(tuple(tuple(r) for r in b_rows))
        q = derive_q(b)
    if not is_negative_definite(q):
        problems.append(f"Q={[list(r) for r in q.gram]} is not negative definite")
    rd = None
    try:
        rd = RootDatum(q, cartan, rd_spec.get("cartan_type"), central) if kind == "simple" else RootDatum.torus(q)
    except ConfigError as exc:
        problems.extend(exc.violations)
    if problems:
        raise ConfigError(problems)
    return WorkbenchConfig(b, q, rd, trunc, source)


def load_config(path) -> WorkbenchConfig:
    """Load and validate a JSON config; a bare preset name (see PRESETS) is also accepted."""
    text = None
    p = Path(path)
    if not p.exists() and str(path) in PRESETS:
        text = resources.files("affine_hecke").joinpath("configs").joinpath(f"{path}.json").read_text(encoding="utf-8")
    else:
        try:
            text = p.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError([f"cannot read {path}: {exc}"])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([f"{path} is not valid JSON: {exc}"])
    return config_from_dict(data, str(path))


def preset(name) -> WorkbenchConfig:
    if name not in PRESETS:
        raise ConfigError([f"unknown preset {name!r}; choose from {', '.join(PRESETS)}"])
    return load_config(name)


__all__ = ["WorkbenchConfig", "load_config", "config_from_dict", "preset", "PRESETS", "DEFAULT_TRUNC", "HeckeError"]
