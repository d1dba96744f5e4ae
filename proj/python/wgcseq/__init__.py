"""Balanced generalized cyclotomic sequences of period p*q.

Construction of the cyclotomic class partition and the balanced sequence,
exact 2-adic complexity analysis, Gauss-period spectra, and exact circulant
determinant verification. The heavy lifting lives in the _wgcseq extension.
"""

try:
    from ._wgcseq import *  # noqa: F401,F403
    from ._wgcseq import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _wgcseq import *  # noqa: F401,F403
    from _wgcseq import __version__  # noqa: F401
