"""Shared test helpers."""

from __future__ import annotations

import pytest

from dptorsor import gpideal, minrep, picard, rootsys, torsor


def clear_all_caches() -> None:
    """Drop every memoized builder so timed tests measure cold runs."""
    for mod in (rootsys, minrep, gpideal, picard, torsor):
        for name in dir(mod):
            obj = getattr(mod, name)
            if callable(obj) and hasattr(obj, "cache_clear"):
                obj.cache_clear()


@pytest.fixture
def cold_caches():
    clear_all_caches()
    return clear_all_caches


def signed_reflection(rep, node: int) -> dict:
    """The lifted simple reflection exp(f) exp(-e) exp(f) as a signed permutation.

    Returns {src: (dst, sign)} meaning the lift sends the basis vector of
    weight ``rep.weights[src]`` to ``sign`` times the one of weight
    ``rep.weights[dst]``.  On a minuscule representation both Chevalley
    operators square to zero, so each exponential is I + N exactly.
    """
    table = {}
    for k in range(rep.dim):
        vec = {k: 1}
        for op, scale in ((rep.lowering[node], 1), (rep.raising[node], -1),
                          (rep.lowering[node], 1)):
            new = dict(vec)
            for src, val in vec.items():
                hit = op.get(src)
                if hit is not None:
                    dst, sgn = hit
                    new[dst] = new.get(dst, 0) + scale * sgn * val
            vec = {i: v for i, v in new.items() if v}
        ((dst, val),) = vec.items()
        assert val in (1, -1)
        assert rep.weights[dst] == rep.rs.reflect(rep.weights[k], node)
        table[k] = (dst, val)
    return table


def reflection_substitution(rep, node: int) -> dict:
    """Variable substitution table for P(s̃·x): x_dst -> sign * x_src."""
    return {dst: (src, val) for src, (dst, val) in signed_reflection(rep, node).items()}
