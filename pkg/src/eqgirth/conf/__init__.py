"""Configuration module for eqgirth.

This module exports the global settings instance for the application.
"""

from eqgirth.conf.global_settings import Settings

settings = Settings()
