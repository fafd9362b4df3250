"""Stratification calculus and Novikov homological algebra.

Thin wrapper around the C++ core: every function takes and returns plain
Python dicts/lists mirroring the JSON schemas (schema tag "rgw/1").
"""

import json as _json

try:
    from . import _rgw  # packaged layout: the extension lives in rgwcalc/
except ImportError:
    import _rgw  # build-tree layout: extension on PYTHONPATH

RgwError = _rgw.RgwError

__all__ = [
    "RgwError",
    "validate",
    "enumerate_trees",
    "enumerate_sd_ribbon",
    "dim",
    "shrink",
    "glue",
    "forget",
    "homology",
    "floer",
    "spectral",
    "canonical",
]


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def validate(palette, obj):
    return _json.loads(_rgw.validate(_dumps(palette), _dumps(obj)))


def enumerate_trees(palette, spec):
    return _json.loads(_rgw.enumerate_trees(_dumps(palette), _dumps(spec)))


def enumerate_sd_ribbon(palette, spec):
    return _json.loads(_rgw.enumerate_sd_ribbon(_dumps(palette), _dumps(spec)))


def dim(palette, obj, n=2):
    return _json.loads(_rgw.dim(_dumps(palette), _dumps(obj), n))


def shrink(palette, obj, level=1, edge=-1):
    return _json.loads(_rgw.shrink(_dumps(palette), _dumps(obj), level, edge))


def glue(palette, left, right):
    return _json.loads(_rgw.glue(_dumps(palette), _dumps(left), _dumps(right)))


def forget(palette, tree, j):
    return _json.loads(_rgw.forget(_dumps(palette), _dumps(tree), j))


def homology(complex_data):
    return _json.loads(_rgw.homology(_dumps(complex_data)))


def floer(palette, counts, mode="novikov"):
    return _json.loads(_rgw.floer(_dumps(palette), _dumps(counts), mode))


def spectral(complex_data, pages=2):
    return _json.loads(_rgw.spectral(_dumps(complex_data), pages))


def canonical(obj):
    return _rgw.canonical(_dumps(obj))
