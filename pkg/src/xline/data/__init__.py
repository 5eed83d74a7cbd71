"""Frozen, oracle-derived formula data."""
