"""Maker-Maker domination game: exact oracle, closed forms, forest solver, play service."""

__version__ = "0.1.0"
