import logging
import os
import sys

from traitlets import Bool, Dict, Float, Integer, Unicode, default
from traitlets.config import Application, catch_config_error

from qwalk3.config import load_run_config
from qwalk3.errors import (
    ConfigError,
    PreconditionError,
    SelectionError,
    VerificationFailure,
    WindowError,
)

# exit status for each failure family
EXIT_FAILURE = 1
EXIT_CONFIG = 2

aliases = {
    "range-lo": "BaseCommand.range_lo",
    "range-hi": "BaseCommand.range_hi",
    "steps": "BaseCommand.steps",
    "tol-agree": "BaseCommand.tol_agree",
    "tol-stat": "BaseCommand.tol_stat",
    "out": "BaseCommand.out",
    "config": "QWalkApplication.config_file",
    "log-level": "Application.log_level",
}

flags = {
    "debug": (
        {"Application": {"log_level": logging.DEBUG}},
        "set log level to logging.DEBUG (maximize logging output)",
    ),
    "json": (
        {"BaseCommand": {"json_output": True}},
        "Emit {params, rows, summary} as JSON instead of CSV",
    ),
    "components": (
        {"BaseCommand": {"components": True}},
        "Add the three chirality component weights to stationary output",
    ),
    "grid": (
        {"BaseCommand": {"default_grid": True}},
        "Verify the built-in parameter grid instead of a single document",
    ),
}


class QWalkApplication(Application):
    """Logging and config-file defaults shared by the top-level app and its commands"""

    config_file = Unicode("qwalk3_config.py", help="The config file to load").tag(
        config=True
    )

    @default("log_level")
    def _log_level_default(self):
        if bool(int(os.environ.get("QWALK3_DEBUG", 0))):
            return logging.DEBUG
        return logging.INFO

    @default("log_datefmt")
    def _log_datefmt_default(self):
        return "%Y-%m-%d %H:%M:%S"

    @default("log_format")
    def _log_format_default(self):
        return "[%(levelname)1.1s %(asctime)s.%(msecs).03d %(name)s %(module)s:%(lineno)d] %(message)s"


class BaseCommand(QWalkApplication):
    """A qwalk3 subcommand: read a run document, build a report, write it out"""

    aliases = Dict(aliases)
    flags = Dict(flags)

    json_output = Bool(False, help="Write JSON instead of CSV").tag(config=True)
    out = Unicode("-", help="Where to write the report; '-' is standard output").tag(
        config=True
    )
    steps = Integer(
        None, allow_none=True, help="Number of walk steps; overrides the run document"
    ).tag(config=True)
    range_lo = Integer(
        None,
        allow_none=True,
        help="Left end of the lattice window; overrides the run document",
    ).tag(config=True)
    range_hi = Integer(
        None,
        allow_none=True,
        help="Right end of the lattice window; overrides the run document",
    ).tag(config=True)
    tol_agree = Float(
        1e-10, help="Allowed gap between a closed-form measure and |psi|^2"
    ).tag(config=True)
    tol_stat = Float(
        1e-8, help="Allowed relative drift of a measure under the walk"
    ).tag(config=True)
    components = Bool(False, help="Add component weights to stationary output").tag(
        config=True
    )
    default_grid = Bool(False, help="Verify the built-in parameter grid").tag(
        config=True
    )

    @catch_config_error
    def initialize(self, *args, **kwargs):
        """Load configuration settings."""
        super().initialize(*args, **kwargs)
        self.load_config_file(self.config_file)

    def fail(self, msg, status=EXIT_CONFIG):
        self.log.critical(msg)
        self.exit(status)

    def load_document(self):
        """The run document with command-line overrides applied"""
        if len(self.extra_args) > 1:
            raise ConfigError(f"expected one run document, got {self.extra_args}")
        source = self.extra_args[0] if self.extra_args else "-"
        config = load_run_config(source)
        if self.range_lo is not None:
            config.range_lo = self.range_lo
        if self.range_hi is not None:
            config.range_hi = self.range_hi
        if self.steps is not None:
            if self.steps < 0:
                raise ConfigError(f"steps must be >= 0, got {self.steps}")
            config.steps = self.steps
        self.log.debug(f"run document: {config.to_dict()}")
        return config.check()

    def emit(self, report):
        text = report.render(self.json_output)
        if self.out == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(self.out, "w", newline="") as f:
                f.write(text)
            self.log.info(f"wrote {len(report)} rows to {self.out}")

    def run(self):
        raise NotImplementedError("Subclasses must build a report")

    def start(self):
        try:
            report = self.run()
        except (ConfigError, PreconditionError, WindowError) as e:
            self.fail(str(e), EXIT_CONFIG)
        except (SelectionError, VerificationFailure) as e:
            self.fail(str(e), EXIT_FAILURE)
        else:
            if report is not None:
                self.emit(report)
