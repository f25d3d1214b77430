import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "spa_tripartite.settings")
django.setup()
