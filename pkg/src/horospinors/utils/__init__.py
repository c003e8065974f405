"""Utility functions"""

from horospinors.utils.logger import logger
from horospinors.utils.sampling import (
    random_spinor,
    random_spinor_pair,
    random_totally_positive,
    random_unimodular,
)

__all__ = [
    "logger",
    "random_spinor",
    "random_spinor_pair",
    "random_totally_positive",
    "random_unimodular",
]
