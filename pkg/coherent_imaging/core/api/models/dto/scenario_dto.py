"""Scenario DTOs for simulation runs."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import voluptuous as vol

from ...exceptions import ScenarioParseError
from ....const import ALPHA_CENTROID, ALPHA_GEOMETRIC, PARAMETER_NAMES, POVM_KINDS

NO_POVM = "none"


def _alpha_policy(value: Any) -> str:
    text = str(value).strip()
    if text in (ALPHA_GEOMETRIC, ALPHA_CENTROID):
        return text
    try:
        number = float(text)
    except ValueError as e:
        raise vol.Invalid(f"alpha must be geometric, centroid or a number, got {text!r}") from e
    if not 0.0 <= number <= 1.0:
        raise vol.Invalid(f"alpha must lie in [0, 1], got {number}")
    return text


def _free_parameters(value: Any) -> List[str]:
    names = [part.strip() for part in str(value).split(",") if part.strip()]
    if not names:
        raise vol.Invalid("at least one free parameter is required")
    unknown = [name for name in names if name not in PARAMETER_NAMES]
    if unknown:
        raise vol.Invalid(f"unknown free parameters: {', '.join(unknown)}")
    return names


def _positive_int(value: Any) -> int:
    try:
        number = int(str(value).strip())
    except ValueError as e:
        raise vol.Invalid(f"expected an integer, got {value!r}") from e
    if number < 1:
        raise vol.Invalid(f"must be at least 1, got {number}")
    return number


SCENARIO_SCHEMA = vol.Schema(
    {
        vol.Required("parameters"): {
            vol.Required("s"): vol.All(vol.Coerce(float), vol.Range(min=0.0)),
            vol.Required("q"): vol.All(vol.Coerce(float), vol.Range(min=0.0, max=1.0)),
            vol.Optional("gamma_r", default=0.0): vol.All(
                vol.Coerce(float), vol.Range(min=-1.0, max=1.0)
            ),
            vol.Optional("gamma_i", default=0.0): vol.All(
                vol.Coerce(float), vol.Range(min=-1.0, max=1.0)
            ),
        },
        vol.Optional("optics", default={}): {
            vol.Optional("sigma", default=1.0): vol.All(vol.Coerce(float), vol.Range(min=0.0, min_included=False)),
            vol.Optional("delta", default=1e-2): vol.All(
                vol.Coerce(float), vol.Range(min=0.0, max=1.0, min_included=False)
            ),
            vol.Optional("alpha", default=ALPHA_GEOMETRIC): _alpha_policy,
        },
        vol.Optional("measurement", default={}): {
            vol.Optional("povm", default=NO_POVM): vol.In(POVM_KINDS + (NO_POVM,)),
        },
        vol.Required("simulation"): {
            vol.Required("slots"): _positive_int,
            vol.Optional("repetitions", default=1): _positive_int,
            vol.Optional("seed", default=0): vol.All(vol.Coerce(int), vol.Range(min=0)),
            vol.Optional("free", default="s"): _free_parameters,
            vol.Optional("output"): str,
        },
    }
)


@dataclass
class ScenarioDTO:
    """Validated simulation scenario."""

    s: float
    q: float
    gamma_r: float
    gamma_i: float
    sigma: float
    delta: float
    alpha: str
    povm: Optional[str]
    slots: int
    repetitions: int
    seed: int
    free: List[str] = field(default_factory=lambda: ["s"])
    output: Optional[str] = None

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Dict[str, Any]],
        line_numbers: Optional[Dict[Tuple[str, str], int]] = None,
    ) -> "ScenarioDTO":
        """Create ScenarioDTO from parsed sections, reporting the offending line."""
        line_numbers = line_numbers or {}
        try:
            clean = SCENARIO_SCHEMA(data)
        except vol.MultipleInvalid as e:
            error = e.errors[0]
            path = tuple(str(part) for part in error.path)
            line = line_numbers.get(path[:2]) if len(path) >= 2 else None
            if line is None and path:
                line = line_numbers.get((path[0], ""))
            raise ScenarioParseError(f"{'.'.join(path)}: {error.msg}", line) from e

        povm = clean["measurement"]["povm"]
        return cls(
            s=clean["parameters"]["s"],
            q=clean["parameters"]["q"],
            gamma_r=clean["parameters"]["gamma_r"],
            gamma_i=clean["parameters"]["gamma_i"],
            sigma=clean["optics"]["sigma"],
            delta=clean["optics"]["delta"],
            alpha=clean["optics"]["alpha"],
            povm=None if povm == NO_POVM else povm,
            slots=clean["simulation"]["slots"],
            repetitions=clean["simulation"]["repetitions"],
            seed=clean["simulation"]["seed"],
            free=clean["simulation"]["free"],
            output=clean["simulation"].get("output"),
        )

    def to_dict(self) -> Dict[str, Dict[str, Any]]:
        """Convert back to sectioned form."""
        simulation: Dict[str, Any] = {
            "slots": self.slots,
            "repetitions": self.repetitions,
            "seed": self.seed,
            "free": ",".join(self.free),
        }
        if self.output:
            simulation["output"] = self.output
        return {
            "parameters": {
                "s": self.s,
                "q": self.q,
                "gamma_r": self.gamma_r,
                "gamma_i": self.gamma_i,
            },
            "optics": {"sigma": self.sigma, "delta": self.delta, "alpha": self.alpha},
            "measurement": {"povm": self.povm or NO_POVM},
            "simulation": simulation,
        }
