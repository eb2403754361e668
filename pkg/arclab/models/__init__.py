"""
Domain models package.

- Arc: ordered point sequence of F_q^k with the arc property
"""

from arclab.models.arc import Arc

__all__ = [
    "Arc",
]
