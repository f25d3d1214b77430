from django.apps import AppConfig


class LinalgOperationsConfig(AppConfig):
    name = "linalg_operations"
