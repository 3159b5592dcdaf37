from .base import BaseSolver

__all__ = ["BaseSolver"]
