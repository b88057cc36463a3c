"""HTTP service over the strangle analytics library."""

from .app import create_app

__all__ = ["create_app"]
