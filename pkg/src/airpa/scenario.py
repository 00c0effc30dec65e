"""Static system description: node geometry, power budget, noise, path-loss law.

The default numbers follow the simulation setup this package reproduces:
BS at the origin, IRS at [200, 0, 35] m, user at [100, 50, 0] m, path-loss
exponents 2.3 (BS-IRS, IRS-user) and 2.5 (BS-user), both noise powers
-100 dBm, and a -30 dB reference gain at 1 m.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field

import yaml


class ConfigError(ValueError):
    """Raised for invalid scenario parameters or malformed config files."""


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0) * 1e-3


def distance(p1, p2) -> float:
    """Euclidean distance between two 3-D points in meters."""
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(p1, p2)))


def pathloss_gain(d: float, alpha: float, reference_gain_db: float = -30.0) -> float:
    """Linear power gain g0 * d^(-alpha) with g0 the gain at the 1 m reference.

    Distances inside the reference distance are rejected: the power law is
    not calibrated there.
    """
    if d < 1.0:
        raise ConfigError(f"distance {d} m is inside the 1 m reference distance")
    return 10.0 ** (reference_gain_db / 10.0) * d ** (-alpha)


@dataclass(frozen=True)
class Scenario:
    bs_position: tuple[float, float, float] = (0.0, 0.0, 0.0)
    irs_position: tuple[float, float, float] = (200.0, 0.0, 35.0)
    user_position: tuple[float, float, float] = (100.0, 50.0, 0.0)
    num_bs_antennas: int = 1
    num_irs_elements: int = 64
    total_power: float = 1.0                  # 30 dBm
    irs_noise_power: float = 1e-13            # -100 dBm
    user_noise_power: float = 1e-13           # -100 dBm
    pathloss_exponent_bs_irs: float = 2.3
    pathloss_exponent_irs_user: float = 2.3
    pathloss_exponent_bs_user: float = 2.5
    reference_gain_db: float = -30.0

    def __post_init__(self):
        object.__setattr__(self, "bs_position", tuple(float(x) for x in self.bs_position))
        object.__setattr__(self, "irs_position", tuple(float(x) for x in self.irs_position))
        object.__setattr__(self, "user_position", tuple(float(x) for x in self.user_position))
        if len(self.bs_position) != 3 or len(self.irs_position) != 3 or len(self.user_position) != 3:
            raise ConfigError("positions must be 3-vectors (meters)")
        if self.num_bs_antennas < 1:
            raise ConfigError("num_bs_antennas must be >= 1")
        if self.num_irs_elements < 1:
            raise ConfigError("num_irs_elements must be >= 1")
        if not self.total_power > 0:
            raise ConfigError("total_power must be > 0")
        if not self.irs_noise_power > 0 or not self.user_noise_power > 0:
            raise ConfigError("noise powers must be > 0")
        for pa, pb, name in (
            (self.bs_position, self.irs_position, "BS-IRS"),
            (self.irs_position, self.user_position, "IRS-user"),
            (self.bs_position, self.user_position, "BS-user"),
        ):
            if distance(pa, pb) <= 0.0:
                raise ConfigError(f"{name} distance must be strictly positive")

    # -- derived link budget -------------------------------------------------

    def d_bs_irs(self) -> float:
        return distance(self.bs_position, self.irs_position)

    def d_irs_user(self) -> float:
        return distance(self.irs_position, self.user_position)

    def d_bs_user(self) -> float:
        return distance(self.bs_position, self.user_position)

    def gain_bs_irs(self) -> float:
        return pathloss_gain(self.d_bs_irs(), self.pathloss_exponent_bs_irs, self.reference_gain_db)

    def gain_irs_user(self) -> float:
        return pathloss_gain(self.d_irs_user(), self.pathloss_exponent_irs_user, self.reference_gain_db)

    def gain_bs_user(self) -> float:
        return pathloss_gain(self.d_bs_user(), self.pathloss_exponent_bs_user, self.reference_gain_db)

    def scenario_hash(self) -> str:
        """Stable 16-hex-digit digest of all fields, for CSV metadata."""
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


_DBM_ALTERNATES = {
    "total_power_dbm": "total_power",
    "irs_noise_power_dbm": "irs_noise_power",
    "user_noise_power_dbm": "user_noise_power",
}
_FIELDS = set(Scenario.__dataclass_fields__)


def scenario_from_dict(raw: dict) -> Scenario:
    """Build a Scenario from config keys.

    Keys are the Scenario field names; the three power fields may instead be
    given in dBm through the *_dbm alternates (dB-valued keys carry the unit
    in their name). Unknown keys are rejected.
    """
    if not isinstance(raw, dict):
        raise ConfigError("scenario config must be a mapping")
    kwargs = {}
    for key, value in raw.items():
        if key in _DBM_ALTERNATES:
            target = _DBM_ALTERNATES[key]
            if target in raw:
                raise ConfigError(f"give either {key} or {target}, not both")
            kwargs[target] = dbm_to_watts(float(value))
        elif key in _FIELDS:
            kwargs[key] = value
        else:
            raise ConfigError(f"unknown scenario key: {key!r}")
    try:
        return Scenario(**kwargs)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc


def load_scenario(path) -> Scenario:
    """Load a Scenario from a YAML (or JSON) config file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc
    if raw is None:
        raw = {}
    return scenario_from_dict(raw)
