from .regions import RectRegion, CircleRegion, NoiseRegion, build_region
from .noise_field import NoiseFieldConfig, noise_field_cov, line_points
from .cov_trace import TrueCovTrace, smooth_cov_trace
