from .constraint_validator import ConstraintValidator

__all__ = ["ConstraintValidator"]
