from . import base_model

__all__ = ["base_model"]
