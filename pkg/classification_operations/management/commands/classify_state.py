import logging

import numpy as np
from django.core.management.base import BaseCommand, CommandError

from classification_operations.report_helper import build_report, render_json, render_pretty
from common.exceptions import SpaTripartiteError
from common.utils import exit_code_for
from state_operations.catalog import catalog_reference
from state_operations.state_helper import build_density
from state_operations.state_parser import load_state_document

logger = logging.getLogger("django")


class Command(BaseCommand):
    help = "Classify a three-qubit state as genuine entangled, biseparable or fully separable using the SPA-PT threshold test"

    def add_arguments(self, parser):
        parser.add_argument(
            "state_file",
            nargs="?",
            default=None,
            help="Path to a JSON state document, '-' reads standard input",
        )

        parser.add_argument(
            "-c",
            "--catalog",
            dest="catalog",
            nargs="+",
            metavar="NAME_AND_PARAMS",
            default=None,
            help="Use a named catalog state instead of a file, followed by its parameters",
        )

        parser.add_argument(
            "-q",
            "--qubit",
            dest="qubit",
            choices=["A", "B", "C"],
            default=None,
            help="Evaluate a single cut only, no verdict is reported",
        )

        parser.add_argument("--p", dest="p", type=float, default=None, help="SPA weight in [0.8, 1), defaults to 0.8")
        parser.add_argument("--eps", dest="eps", type=float, default=None, help="Tolerance of the threshold comparison")
        parser.add_argument("--tangle", dest="tangle", action="store_true", help="Include the three-tangle of a pure input")
        parser.add_argument("--pretty", dest="pretty", action="store_true", help="Print a table instead of JSON")

    def handle(self, *args, **options):
        state_file = options["state_file"]
        catalog_args = options["catalog"]
        if bool(state_file) == bool(catalog_args):
            raise CommandError("Give either a state file or --catalog NAME [PARAMS ...]", returncode=2)

        try:
            if catalog_args:
                name, raw_params = catalog_args[0], catalog_args[1:]
                spec = catalog_reference(name, [self.parse_param(value) for value in raw_params])
            else:
                spec = load_state_document(state_file)
            rho = build_density(spec)
            report = build_report(
                spec,
                rho,
                qubits=[options["qubit"]] if options["qubit"] else None,
                p=options["p"],
                eps=options["eps"],
                include_tangle=options["tangle"],
            )
        except (SpaTripartiteError, np.linalg.LinAlgError) as err:
            logger.error("Classification failed: %s" % err)
            raise CommandError(str(err), returncode=exit_code_for(err)) from err

        self.stdout.write(render_pretty(report) if options["pretty"] else render_json(report))

    @staticmethod
    def parse_param(value: str) -> float:
        try:
            return float(value)
        except ValueError as err:
            raise CommandError("Catalog parameter '{value}' is not a number".format(value=value), returncode=2) from err
