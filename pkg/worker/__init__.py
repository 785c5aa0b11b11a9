"""Tverberg Lab engine and RQ worker."""
