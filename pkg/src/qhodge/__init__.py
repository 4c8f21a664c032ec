"""Exact symbolic engine for the left-covariant 3d calculi on quantum SU(2),
their braided exterior algebras, Hodge operators and the induced Hodge
theory on the standard Podles sphere.

Every scalar is an exact element of Q(i)(s) with q = s^2.
"""

__version__ = "0.1.0"
