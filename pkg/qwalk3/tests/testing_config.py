from traitlets.config import get_config

c = get_config()

c.BaseCommand.tol_agree = 1e-10
c.BaseCommand.tol_stat = 1e-8
