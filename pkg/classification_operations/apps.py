from django.apps import AppConfig


class ClassificationOperationsConfig(AppConfig):
    name = "classification_operations"
