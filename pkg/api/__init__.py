"""HTTP service for Tverberg Lab campaigns."""
