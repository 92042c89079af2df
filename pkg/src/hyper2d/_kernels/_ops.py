"""Opcodes of the tiny stage programs executed by the grid kernels.

A program is a flat pipeline: each stage maps the running pair (x, y) to a
new pair. Function composition therefore flattens to a stage list. The
compiled backend (_core.pyx) hardcodes the same values; keep them in sync.
"""

OP_EXP = 1       # e^x * (cosh y, sinh y)  [hyperbolic]  /  e^x * (cos y, sin y)  [elliptic]
OP_LOG = 2       # inverse of OP_EXP on its principal domain
OP_POW = 3       # integer power, int parameter n (negative n inverts first)
OP_POLY = 4      # polynomial, int parameter = #coefficients, floats = pairs low..high
OP_AFFINE = 5    # a*w + b, floats = (a_x, a_y, b_x, b_y)
OP_SHEAR_CONTROL = 6   # (x, 2y): deliberately breaks the first-order analyticity equations
OP_SQUARE_CONTROL = 7  # (x^2, 0): deliberately breaks the second-order field equation
