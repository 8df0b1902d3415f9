"""Small shared helpers."""

from __future__ import annotations

from .graph import idkey


def sorted_ids(ids):
    return sorted(ids, key=idkey)
