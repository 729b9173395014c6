"""JSON Schemas for every machine-readable output format."""

import json
from importlib import resources

NAMES = ("classify", "dense_orbit", "facet_list", "member", "memo_cache")


def load_schema(name: str) -> dict:
    """Load one of the shipped schemas by bare name."""
    if name not in NAMES:
        raise ValueError(f"unknown schema {name!r}; have {NAMES}")
    path = resources.files(__package__).joinpath(f"{name}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))
