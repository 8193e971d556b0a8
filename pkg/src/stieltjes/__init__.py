"""Exact Lebesgue-Stieltjes calculus for non-decreasing functions with jumps."""
from .core import (EMPTY, INF, NEG_INF, Interval, InvalidArgument, Jump, MonotoneFn, OutOfRange,
                   ParseError, StieltjesError, compose, constant, identity_on, inf_sup_over,
                   piecewise_linear, sgn_shift, step)
from .integral import PartsReport, a_term, change_of_variables, ls_integral, parts
from .inverse import InverseVersion, gen_inverse, inverse_fn
from .measure import IntervalImage, atoms_in, interval_image, ls_measure
from .young import (BoundReport, classical_bounds, closed_interval_bounds, s_functional_bounds,
                    t_bounds, t_functional, t_lower_bound, t_upper_bound)
from .applications import (DistSpec, MedianSet, cdf, expected_cdf, gupta_sum, measure_young,
                           median_bound_check, median_set, summation_identity)
from .oracle import lemleb_check, partition_sum

__version__ = "0.1.0"
