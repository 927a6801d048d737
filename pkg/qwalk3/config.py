"""The JSON run document every command reads"""
import json
import math
import sys

from traitlets import (
    Dict,
    Enum,
    Float,
    HasTraits,
    Integer,
    List,
    TraitError,
    Union,
    validate,
)

from qwalk3.coins import generalized_grover, grover, model_a
from qwalk3.errors import ConfigError
from qwalk3.stationary import DefectForm, FunctionSeed, TwoParameterSeed

MODELS = ("grover", "gphi", "agamma", "model1", "model2", "free")
STATIONARY_MODELS = ("free", "model1", "model2")
# other names a run document may give a model
MODEL_ALIASES = {"prop31": "free"}
ANGLES = ("phi", "gamma", "theta")

# fields each model cannot do without
REQUIRED = {
    "grover": (),
    "gphi": ("phi",),
    "agamma": ("gamma",),
    "model1": ("phi", "theta", "phi1", "phi3"),
    "model2": ("gamma", "theta", "phi1", "phi3"),
    "free": ("phi", "seq"),
}


def _pair(**kwargs):
    return List(Float(), minlen=2, maxlen=2, **kwargs)


def as_complex(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


class RunConfig(HasTraits):
    """
    Parameters of one run.

    Complex values are `[re, im]` pairs. `seq` is either a single pair (a
    constant function) or an object mapping integer sites to pairs (zero
    off the listed sites).
    """

    model = Enum(
        MODELS + tuple(MODEL_ALIASES),
        help="Which coin or stationary construction to use",
    )
    phi = Float(None, allow_none=True, help="Angle of generalized_grover")
    gamma = Float(None, allow_none=True, help="Angle of model_a")
    theta = Float(
        None, allow_none=True, help="Defect phase e^{2 pi i theta} at the origin"
    )
    phi1 = _pair(default_value=None, allow_none=True)
    phi3 = _pair(default_value=None, allow_none=True)
    range_lo = Integer(-10)
    range_hi = Integer(10)
    steps = Integer(10, min=0)
    seq = Union(
        [_pair(), Dict(value_trait=_pair())], default_value=None, allow_none=True
    )
    form = Enum(
        tuple(f.value for f in DefectForm), default_value=DefectForm.MATCHED.value
    )

    @validate("model")
    def _canonical_model(self, proposal):
        return MODEL_ALIASES.get(proposal["value"], proposal["value"])

    @validate("seq")
    def _valid_seq(self, proposal):
        value = proposal["value"]
        if isinstance(value, dict):
            for key in value:
                try:
                    int(key)
                except ValueError:
                    raise TraitError(f"seq site {key!r} is not an integer")
        return value

    @classmethod
    def field_names(cls):
        return sorted(cls.class_trait_names())

    @property
    def seed(self) -> TwoParameterSeed:
        return TwoParameterSeed(as_complex(self.phi1), as_complex(self.phi3))

    def function_seed(self) -> FunctionSeed:
        if isinstance(self.seq, dict):
            return FunctionSeed.from_table(
                {int(x): as_complex(pair) for x, pair in self.seq.items()}
            )
        return FunctionSeed.constant(as_complex(self.seq))

    @property
    def defect_form(self) -> DefectForm:
        return DefectForm(self.form)

    def coin(self):
        """The homogeneous coin the model is built on"""
        if self.model == "grover":
            return grover()
        if self.model in ("gphi", "model1", "free"):
            return generalized_grover(self.phi)
        return model_a(self.gamma)

    def check(self):
        for name in ANGLES:
            value = getattr(self, name)
            if value is not None and not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value}")
        missing = [name for name in REQUIRED[self.model] if getattr(self, name) is None]
        if missing:
            raise ConfigError(f"model {self.model} needs {', '.join(missing)}")
        if self.theta is not None and not 0.0 < self.theta < 1.0:
            raise ConfigError(
                f"theta must lie strictly inside (0, 1), got {self.theta}"
            )
        if self.range_lo > self.range_hi:
            raise ConfigError(f"range [{self.range_lo}, {self.range_hi}] is empty")
        return self

    def to_dict(self):
        """Fields that are set, in a fixed order, complex values as pairs"""
        out = {}
        for name in self.field_names():
            value = getattr(self, name)
            if value is None:
                continue
            if name == "seq" and isinstance(value, dict):
                sites = sorted(value, key=int)
                value = {site: list(value[site]) for site in sites}
            out[name] = value
        return out


def parse_run_config(doc) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("run document must be a JSON object")
    unknown = sorted(set(doc) - set(RunConfig.class_trait_names()))
    if unknown:
        raise ConfigError(f"unknown field(s) in run document: {', '.join(unknown)}")
    if "model" not in doc:
        raise ConfigError("run document has no model")
    try:
        config = RunConfig(**doc)
    except TraitError as e:
        raise ConfigError(str(e)) from e
    return config.check()


def load_run_config(source="-", stdin=None) -> RunConfig:
    """
    Read a run document from a file path, or from standard input when `source` is "-".

    Raises
    ------
    ConfigError
        If the document cannot be read, is not JSON or does not describe a valid run.
    """
    try:
        if source == "-":
            stdin = stdin or sys.stdin
            if stdin.isatty():
                raise ConfigError(
                    "no run document given and standard input is a terminal"
                )
            text = stdin.read()
        else:
            with open(source) as f:
                text = f.read()
    except OSError as e:
        raise ConfigError(f"cannot read run document {source}: {e}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"run document is not valid JSON: {e}") from e
    return parse_run_config(doc)
