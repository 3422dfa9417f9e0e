from __future__ import annotations

import pytest

from rouqva.cartan import build_context
from rouqva.tau import canonical_tau


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(label, rank, wp, ell):
        key = (label, rank, wp, ell)
        if key not in cache:
            cache[key] = build_context(*key)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def canonical_cache(ctx_cache):
    cache = {}

    def get(label, rank, wp, ell, top=12):
        key = (label, rank, wp, ell, top)
        if key not in cache:
            cache[key] = canonical_tau(ctx_cache(label, rank, wp, ell), top)
        return cache[key]

    return get
