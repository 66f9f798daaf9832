"""Keeps the tests directory importable so test modules can share util.py."""
