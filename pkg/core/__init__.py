"""Core module for BookCross."""
