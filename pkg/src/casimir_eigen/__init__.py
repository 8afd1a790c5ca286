"""Exact eigenvalues of invariant differential operators for GL(n,R).

The package computes, in exact rational arithmetic, the eigenvalues of
elementary differential operators and of the order-m Casimir operators
acting on power functions and Maass forms, expressed in the Langlands
parameters a1..aN.  Every fast combinatorial evaluation can be checked
against an independent Iwasawa/Gram-Schmidt oracle built on a multilinear
truncated (jet) algebra.
"""

__version__ = "0.1.0"
