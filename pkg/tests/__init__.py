"""Fishburn tests."""
