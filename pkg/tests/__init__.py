"""Test package for induced-paths."""
