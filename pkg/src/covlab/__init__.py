"""covlab: exact computational workbench for finite-group 2-cohomology,
group extensions, functorial covariance, field multiplets, covering groups
and symbolic Wick-power scaling."""

__version__ = "0.1.0"

from . import (cohomology2, config, covariance, covering, exactlin, extension,
               fincat, fingroup, models, multiplet, schemas, wickscale)

__all__ = [
    "__version__", "cohomology2", "config", "covariance", "covering",
    "exactlin", "extension", "fincat", "fingroup", "models", "multiplet",
    "schemas", "wickscale",
]
