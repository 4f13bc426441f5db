"""Exact arithmetic for weight-graded Frobenius data on reductive groups,
function-field L-value evaluation, conjugacy-type class sums, and symbolic
divisibility certificates."""

__version__ = "0.1.0"
