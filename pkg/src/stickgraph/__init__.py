"""Recognition, certification and minimum-length layout of A-Stick graphs."""

from .model import GroundOrder, Instance, b_profiles, fixture, ordered_matrix, parse_instance

__all__ = ["GroundOrder", "Instance", "b_profiles", "fixture", "ordered_matrix", "parse_instance"]
__version__ = "0.1.0"
