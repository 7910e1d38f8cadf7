"""Exact arithmetic, geometry services and shared infrastructure."""
