"""Numerical tolerances shared across the library.

Module-level values so an application can retune them once, globally.
Coefficient and weight "zero" tests are relative to the largest modulus in
the list they belong to; the remaining knobs are relative to the explicit
scale factors documented at their call sites.
"""

zero = 1e-10            # coefficient or weight treated as zero (relative)
resultant = 1e-8        # coprimality threshold on the resultant modulus
gcd_remainder = 1e-9    # Euclid remainder declared zero (relative)
pole = 1e-12            # curve denominator treated as vanishing (relative)
weight_residue = 1e-12  # imaginary residue zeroed in conjugate products (absolute)
