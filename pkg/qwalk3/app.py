import logging
import os
import sys

import sentry_sdk
from traitlets import Dict
from traitlets.config import catch_config_error

from qwalk3 import __version__
from qwalk3.commands import default_commands
from qwalk3.commands.base import EXIT_CONFIG, QWalkApplication, flags

subcommands = {
    command.name: (command, command.description.strip()) for command in default_commands
}


class QWalk3(QWalkApplication):
    """The qwalk3 application"""

    name = "qwalk3"
    version = __version__

    description = """
        Three-state quantum walks on the line: coins, evolution, stationary
        measures and their verification
    """

    flags = Dict({"debug": flags["debug"]})
    subcommands = Dict(subcommands)

    def init_sentry(self):
        sentry_dsn = os.environ.get("QWALK3_SENTRY_DSN", "")
        if sentry_dsn:
            sentry_sdk.init(dsn=sentry_dsn, release="qwalk3@" + __version__)
            self.log.debug("crash reporting enabled")

    @catch_config_error
    def initialize(self, *args, **kwargs):
        """Load configuration settings."""
        self.init_sentry()
        super().initialize(*args, **kwargs)
        self.load_config_file(self.config_file)

    def start(self):
        if self.subapp:
            self.subapp.start()
            return
        self.print_subcommands()
        self.log.critical("no command given; choose one of " + ", ".join(subcommands))
        self.exit(EXIT_CONFIG)


def _expand_range(argv):
    """Rewrite `--range LO HI` as `--range-lo=LO --range-hi=HI`"""
    out = []
    args = iter(argv)
    for arg in args:
        if arg != "--range":
            out.append(arg)
            continue
        bounds = [next(args, None), next(args, None)]
        if None in bounds:
            raise ValueError("--range needs two integers, LO and HI")
        out += [f"--range-lo={bounds[0]}", f"--range-hi={bounds[1]}"]
    return out


def _clear_instances():
    QWalk3.clear_instance()
    QWalkApplication.clear_instance()
    for command in default_commands:
        command.clear_instance()


def main(argv=None, config=None):
    """Run qwalk3 and return its exit status"""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        argv = _expand_range(argv)
    except ValueError as e:
        logging.getLogger("qwalk3").critical(str(e))
        return EXIT_CONFIG
    _clear_instances()
    try:
        app = QWalk3.instance(config=config)
        try:
            app.initialize(argv)
        except SystemExit as e:
            # --help, or options traitlets could not parse
            return 0 if e.code in (0, None) else EXIT_CONFIG
        except ValueError as e:
            # option values that fail conversion to their trait type
            app.log.critical(f"bad option: {e}")
            return EXIT_CONFIG
        try:
            app.start()
        except SystemExit as e:
            return 0 if e.code is None else int(e.code)
        return 0
    finally:
        _clear_instances()


if __name__ == "__main__":
    sys.exit(main())
