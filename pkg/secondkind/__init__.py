"""Stirling numbers of the first kind and Bernoulli numbers of the second kind.

Every quantity is computed exactly (Python integers and
`fractions.Fraction`) by several independent routes that must agree:

- s(n,k): triangular recursion (`StirlingTriangle`), expansion of the
  falling factorial (`stirlingFromProduct`), nested harmonic sums
  (`stirlingFromNested`) and the generating function [ln(1+x)]^m/m!
  (`stirlingFromSeries`).
- a(n,i), the coefficients of the n-th derivative of 1/ln x: recursion
  (`CoeffTable`), link with s(n,i-1) (`coefficientFromStirling`) and
  nested sums (`coefficientFromNested`).
- b_n: closed formula through a(n,i) (`bernoulli2FromCoefficients`),
  Stirling sum (`bernoulli2FromStirling`) and the series x/ln(1+x)
  (`bernoulli2FromSeries`).

A floating-point layer checks the closed forms of the derivatives of
1/ln x, 1/ln(1+t), x/ln(1+x) and exp(-1/t) against truncated Taylor
arithmetic (`Jet`), and the integral representations built on them
with Gauss-Laguerre and adaptive quadrature (`integrals`).

Run `python -m secondkind --help` for the command line: tables,
b_n queries, verification suites and checks against OEIS-style files.
"""

""" We import everything by default, in the general namespace because it is simpler for everyone """

""" Exact tables and numbers """
from .harmonicnest import *
from .stirling import *
from .coefficients import *
from .bernoulli import *

""" Formal power series with rational coefficients """
from .powerseries import *

""" Derivatives: closed forms and truncated Taylor arithmetic """
from .jet import *
from .derivatives import *

""" Integral representations """
from .quadrature import *
from .integrals import *

""" Output, fixtures and verification suites """
from .records import *
from .tables import *
from .fixtures import *
from .verification import *

__version__ = "1.0.0"
