"""Symbolic differential algebra and Hamiltonian-operator verification.

The heavy lifting happens in the compiled extension; this package re-exports
it with a couple of conveniences.  Expressions travel as strings in the same
grammar the ``jetpoisson`` command line uses::

    >>> import jetpoisson
    >>> ctx = jetpoisson.Context()
    >>> ctx.euler("1/2*u_x^2")
    {'u': '-u[2]'}
    >>> ctx.hamiltonian("D^3 + 2/3*u*D + 1/3*u_x")["verdict"]
    'hamiltonian'
"""

from ._core import Context, ExprParseError, corpus

__all__ = ["Context", "ExprParseError", "corpus"]
