"""Exact certification of low-degree invariants of the stable mapping class group.

Start from :func:`icosacert.cli.run_suite` or the ``verify`` command.
"""

from .exact.abelian import FGAbelianGroup
from .exact.cyclotomic import CyclotomicNumber

__all__ = ["CyclotomicNumber", "FGAbelianGroup"]
