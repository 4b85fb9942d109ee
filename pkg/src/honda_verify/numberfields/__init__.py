"""Quadratic and biquadratic fields with class number checks."""

from .biquadratic import BiquadraticField, PrimeIdealFactor, class_number_one_check, parse_field_spec
from .quadratic import (
    QuadraticFieldData,
    quad_class_number,
    quadratic_class_number_report,
    quadratic_field_data,
    reduced_forms,
)

__all__ = [
    "BiquadraticField",
    "PrimeIdealFactor",
    "QuadraticFieldData",
    "class_number_one_check",
    "parse_field_spec",
    "quad_class_number",
    "quadratic_class_number_report",
    "quadratic_field_data",
    "reduced_forms",
]
