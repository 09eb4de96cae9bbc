"""Content hashing for the audit trail."""

from __future__ import annotations

import hashlib


def source_hash(raw_text: str) -> str:
    """SHA-256 hash of a source file's text."""
    return hashlib.sha256(raw_text.encode("utf-8")).hexdigest()


def output_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
