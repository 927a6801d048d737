from qwalk3.commands.coin import CoinCommand
from qwalk3.commands.eigen import EigenCommand
from qwalk3.commands.evolve import EvolveCommand
from qwalk3.commands.stationary import StationaryCommand
from qwalk3.commands.verify import VerifyCommand

default_commands = [
    CoinCommand,
    StationaryCommand,
    EvolveCommand,
    VerifyCommand,
    EigenCommand,
]
