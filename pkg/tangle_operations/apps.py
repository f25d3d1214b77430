from django.apps import AppConfig


class TangleOperationsConfig(AppConfig):
    name = "tangle_operations"
