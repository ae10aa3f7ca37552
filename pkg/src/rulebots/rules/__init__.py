"""Rule packages: layered behaviour definitions loaded from manifests."""

from rulebots.rules.manifest import (
    LEVELS,
    PackageError,
    RulePackage,
    load_package,
    load_stack,
    parse_manifest,
)
from rulebots.rules.validator import validate_stack

__all__ = [
    "LEVELS",
    "PackageError",
    "RulePackage",
    "load_package",
    "load_stack",
    "parse_manifest",
    "validate_stack",
]
