"""Shared fixtures and memoized decisions for the test suite."""

from __future__ import annotations

import functools

from inscribe import decide_circumscribable, decide_inscribable, generate

CORPUS_SPECS = (
    [
        ("tetrahedron", None),
        ("cube", None),
        ("octahedron", None),
        ("dodecahedron", None),
        ("icosahedron", None),
    ]
    + [(fam, n) for n in range(3, 9) for fam in ("prism", "antiprism", "wheel", "bipyramid")]
    + [("kleetope(tetrahedron)", None)]
)


def corpus_name(family: str, n) -> str:
    return family if n is None else f"{family}({n})"


@functools.lru_cache(maxsize=1)
def corpus() -> dict:
    return {corpus_name(f, n): generate(f, n) for f, n in CORPUS_SPECS}


def small_corpus() -> dict:
    return {name: g for name, g in corpus().items() if g.vertex_count <= 14}


# Decisions are deterministic; share them across acceptance criteria.
circumscribable = functools.lru_cache(maxsize=None)(decide_circumscribable)
inscribable = functools.lru_cache(maxsize=None)(decide_inscribable)
