"""A fixed collection of small complexes (at most five vertices) used by checks."""

from __future__ import annotations

from .simplicial import (SimplicialComplex, boundary_of_simplex, build_complex, full_simplex,
                         point, polygon, simplex_skeleton, vertices_only)


def corpus() -> dict[str, SimplicialComplex]:
    """Twenty named complexes, deterministic order."""
    return {
        "point": point(),
        "two-points": vertices_only(2),
        "edge": full_simplex(2),
        "three-points": vertices_only(3),
        "edge+point": build_complex(3, [[1, 2], [3]]),
        "path-3": build_complex(3, [[1, 2], [2, 3]]),
        "boundary-triangle": boundary_of_simplex(3),
        "triangle": full_simplex(3),
        "four-points": vertices_only(4),
        "square": polygon(4),
        "path-4": build_complex(4, [[1, 2], [2, 3], [3, 4]]),
        "star-4": build_complex(4, [[1, 2], [1, 3], [1, 4]]),
        "two-edges": build_complex(4, [[1, 2], [3, 4]]),
        "triangle+pendant": build_complex(4, [[1, 2, 3], [3, 4]]),
        "skel1-simplex4": simplex_skeleton(4, 1),
        "boundary-simplex4": boundary_of_simplex(4),
        "two-triangles": build_complex(4, [[1, 2, 3], [2, 3, 4]]),
        "pentagon": polygon(5),
        "skel1-simplex5": simplex_skeleton(5, 1),
        "bipyramid-5": build_complex(5, [[1, 2, 4], [2, 3, 4], [1, 3, 4], [1, 2, 5], [2, 3, 5], [1, 3, 5]]),
    }


def small_corpus(max_vertices: int) -> dict[str, SimplicialComplex]:
    return {k: v for k, v in corpus().items() if v.m <= max_vertices}
