from __future__ import annotations

import pytest

from copgame import enumerate_connected, has_induced_mk2


@pytest.fixture(scope="session")
def connected_upto6() -> dict[int, tuple]:
    """All connected graphs on up to 6 vertices, one per isomorphism class."""
    return {n: enumerate_connected(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def tk2free_upto6(connected_upto6) -> dict[int, tuple]:
    return {
        n: tuple(g for g in gs if not has_induced_mk2(g, 2))
        for n, gs in connected_upto6.items()
    }
