"""
Command modules for the ordo CLI.
"""
