"""Workbench for graded cluster algebras and their module-category models."""

__version__ = "0.1.0"
