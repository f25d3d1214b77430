import logging

import numpy as np
from django.core.management.base import BaseCommand, CommandError

from classification_operations.report_helper import render_csv
from classification_operations.reproduction_helper import scan_family
from common.exceptions import SpaTripartiteError
from common.utils import exit_code_for

logger = logging.getLogger("django")


class Command(BaseCommand):
    help = "Classify every point of a parameter grid over a catalog family (or rho2_line) and print the results as CSV"

    def add_arguments(self, parser):
        parser.add_argument("family", help="Catalog state name, or rho2_line for q2 = (1 - q1) / n")

        parser.add_argument(
            "-g",
            "--grid",
            dest="grid",
            action="append",
            default=[],
            metavar="AXIS",
            help="name=start:stop:count or name=v1,v2,... ; repeat for a Cartesian product",
        )

        parser.add_argument("--eps", dest="eps", type=float, default=None, help="Tolerance of the threshold comparison")
        parser.add_argument("--tangle", dest="tangle", action="store_true", help="Add the three-tangle column (pure families only)")

    def handle(self, *args, **options):
        try:
            rows, columns = scan_family(options["family"], options["grid"], eps=options["eps"], include_tangle=options["tangle"])
        except (SpaTripartiteError, np.linalg.LinAlgError) as err:
            logger.error("Scan failed: %s" % err)
            raise CommandError(str(err), returncode=exit_code_for(err)) from err
        self.stdout.write(render_csv(rows, columns), ending="")
