from .range import range_h, range_jacobian
from .bearings import bearings_h, bearings_jacobian, wrap_angle, angle_residual, circular_mean
