from qwalk3.linalg3 import unitarity_defect
from qwalk3.report import MeasureReport

from .base import BaseCommand


class CoinCommand(BaseCommand):
    """Print the homogeneous coin of a run document"""

    name = "coin"
    description = """
        Print the 3x3 coin entries as (re, im) and its unitarity defect
    """

    def run(self):
        config = self.load_document()
        coin = config.coin()
        rows = [
            [i, j, coin[i, j].real, coin[i, j].imag]
            for i in range(3)
            for j in range(3)
        ]
        # no parameter echo: equal coins print identically
        return MeasureReport(
            ["row", "col", "re", "im"],
            rows,
            summary={"unitarity_defect": unitarity_defect(coin)},
        )
