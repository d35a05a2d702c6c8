"""Arrangement corpora and the theorem-suite runner."""
