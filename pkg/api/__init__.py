"""API layer"""

