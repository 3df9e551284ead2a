import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Hadamard.settings')
django.setup()
