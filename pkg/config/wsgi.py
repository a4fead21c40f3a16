"""
WSGI config for the ordsgp project.

It exposes the WSGI callable as a module-level variable named ``application``.
"""

import os

from django.core.wsgi import get_wsgi_application


def _migrate_if_requested():
    """Apply migrations at worker start when AUTO_MIGRATE is set, so recorded suite runs have their tables."""
    auto_migrate = os.getenv("AUTO_MIGRATE", "").strip().lower()
    if auto_migrate not in ("1", "true", "yes"):
        return

    from django.core.management import call_command

    call_command("migrate", interactive=False, verbosity=1)


os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
application = get_wsgi_application()
_migrate_if_requested()
