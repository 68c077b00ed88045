from .wiener_velocity import wiener_velocity
from .coordinated_turn import (coordinated_turn_f, coordinated_turn_jacobian,
                               coordinated_turn_matrix, coordinated_turn_Q)
