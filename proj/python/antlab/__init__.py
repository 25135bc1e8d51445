"""Python surface over the C++ ant toolkit: exact simulation, highway
certificates, behavior classification. JSON-bearing calls are decoded into
plain dicts."""

import json

from _antlab import (  # noqa: F401
    Config,
    certify_highway_json,
    classify_json,
    detect_highway_json,
    load_pattern_config,
    render_pgm,
    run,
    visit_histogram,
)

__all__ = [
    "Config",
    "run",
    "detect_highway",
    "certify_highway",
    "classify",
    "load_pattern_config",
    "visit_histogram",
    "render_pgm",
]


def detect_highway(config, word, max_steps=1_000_000, max_period=10_000, max_cells=0):
    """Returns the highway certificate as a dict, or None."""
    text = detect_highway_json(config, word, max_steps, max_period, max_cells)
    return None if text is None else json.loads(text)


def certify_highway(config, word, t0, period, drift, max_cells=0):
    """Returns {'certified': bool, ...} with the certificate or the rejection."""
    return json.loads(certify_highway_json(config, word, t0, period, tuple(drift), max_cells))


def classify(config, word, max_steps=1_000_000, recurrence_steps=300_000, max_cells=0):
    """Returns the behavior report as a dict (class, evidence, fits)."""
    return json.loads(classify_json(config, word, max_steps, recurrence_steps, max_cells))
