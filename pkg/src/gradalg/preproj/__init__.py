"""Preprojective algebras, their modules, and categorified seeds."""
