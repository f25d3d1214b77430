from django.apps import AppConfig


class StateOperationsConfig(AppConfig):
    name = "state_operations"
