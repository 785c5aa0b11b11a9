"""Shared contracts and helpers for Tverberg Lab."""
