"""Python access to the ordfactor checks; reports come back as dicts."""

import json

from . import _core
from ._core import InputError, conditions, decompose, instance_text

__all__ = ["InputError", "check", "check_text", "conditions", "decompose", "instance_text"]


def check(gen, conditions="all", cap_m=20, cap_unique=6, seed=0):
    return json.loads(_core.check_generated(gen, conditions, cap_m, cap_unique, seed))


def check_text(text, conditions="all", cap_m=20, cap_unique=6):
    return json.loads(_core.check_text(text, conditions, cap_m, cap_unique))
