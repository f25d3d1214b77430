import logging

from django.core.management.base import BaseCommand, CommandError

from classification_operations.report_helper import render_csv
from classification_operations.reproduction_helper import REPRODUCTION_TARGETS, reproduce
from common.exceptions import SpaTripartiteError
from common.utils import exit_code_for

logger = logging.getLogger("django")


class Command(BaseCommand):
    help = "Recompute the published G3 and B2 tables or the worked examples and print them as CSV with computed-minus-published deltas"

    def add_arguments(self, parser):
        parser.add_argument("target", choices=REPRODUCTION_TARGETS, help="table1, table2 or examples")

    def handle(self, *args, **options):
        try:
            rows = reproduce(options["target"])
        except SpaTripartiteError as err:
            logger.error("Reproduction failed: %s" % err)
            raise CommandError(str(err), returncode=exit_code_for(err)) from err
        self.stdout.write(render_csv(rows), ending="")
