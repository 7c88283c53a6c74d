"""
epigen - idempotent and conjugate factorizations of singular transformations.

The subpackages are imported as top-level packages with this directory on
``sys.path`` (see ``epigen.py`` and ``app/__init__.py``).
"""

__version__ = "0.1.0"
