from django.apps import AppConfig


class PartialTransposeOperationsConfig(AppConfig):
    name = "partial_transpose_operations"
