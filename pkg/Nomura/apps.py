from django.apps import AppConfig


class NomuraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'Nomura'
