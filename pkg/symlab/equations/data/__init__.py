"""Embedded equation files (one JSON document per catalog entry)."""
