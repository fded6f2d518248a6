# Django management commands

