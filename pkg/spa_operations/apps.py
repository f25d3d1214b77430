from django.apps import AppConfig


class SpaOperationsConfig(AppConfig):
    name = "spa_operations"
