"""Exact pointed braided-category data, categorical-extension words and DHR statistics."""

from .scalar import Cyc, exp_i_pi, root_of_unity

__version__ = "0.1.0"

__all__ = ["Cyc", "root_of_unity", "exp_i_pi", "__version__"]
