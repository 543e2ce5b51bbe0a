# Copyright ampkit Developers.
# See LICENSE for details.

"""
Numerical tolerances shared by every ampkit module.
"""

# S <-> ABCD round trips, polar round trips.
ROUND_TRIP = 1e-12

# Smallest magnitude accepted for any denominator.
DENOMINATOR = 1e-15

# Distance from a tan/cot pole at which a stub is considered singular.
POLE = 1e-9

# a*d - b*c of reciprocal element models; lossless power balance.
RECIPROCITY = 1e-9

# Guard band around K = 1, |delta| = 1 and mu = 1.
STABILITY_BOUNDARY = 1e-9

# Simultaneous-match fixed point and synthesized network residuals.
MATCH_RESIDUAL = 1e-9

# Frequencies closer than this are the same record.
FREQUENCY_MATCH_HZ = 1.0

# Cross-check between the two maximum transducer gain formulas.
GAIN_CROSS_CHECK_DB = 0.01
