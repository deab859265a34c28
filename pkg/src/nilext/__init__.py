"""nilext: exact-arithmetic toolkit for nilpotent bicommutative algebras.

Structure-constant algebras over Q and GF(p); second cohomology; central
extensions; automorphism groups and their orbit actions; isomorphism testing;
a built-in catalog of one-generated nilpotent bicommutative algebras in
dimensions 2-6; and a brute-force enumeration oracle for machine
verification of the whole pipeline at tiny sizes.
"""

from .algebra import Algebra
from .fields import GF, QQ, Field

__version__ = "0.1.0"

__all__ = ["Algebra", "Field", "GF", "QQ", "__version__"]
