"""Command-line experiment runner for the ordo solvers."""
