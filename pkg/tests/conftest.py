import pytest

from companion_bases import ExchangeMatrix
from companion_bases.companion import CompanionBasis
from companion_bases.root_system import DynkinType, build_root_system

# A4 quiver made of an oriented triangle 1->2->3->1 with a pendant arrow 0->1;
# the smallest quiver whose d-vectors are not plain root coordinates.
PENDANT_ARROWS = [(0, 1), (1, 2), (2, 3), (3, 1)]

# The ten d-vectors of the positive A4 roots over PENDANT_BASIS.
PENDANT_DVECTORS = frozenset(
    {
        (1, 0, 0, 0),
        (0, 1, 1, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 1, 1, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 1),
        (1, 1, 0, 0),
        (0, 1, 0, 1),
        (1, 1, 0, 1),
    }
)


def dynkin_orientation(label: str) -> ExchangeMatrix:
    """The orientation of a Dynkin diagram with arrows along increasing labels."""
    dt = DynkinType.parse(label)
    return ExchangeMatrix.from_arrows(dt.rank, dt.edges())


@pytest.fixture
def pendant_quiver() -> ExchangeMatrix:
    return ExchangeMatrix.from_arrows(4, PENDANT_ARROWS)


@pytest.fixture
def rs_a4():
    return build_root_system(DynkinType("A", 4))


@pytest.fixture
def pendant_basis(rs_a4) -> CompanionBasis:
    # gamma = (-a1, -a2-a3, a3, a4)
    return CompanionBasis(
        rs_a4,
        (
            (-1, 0, 0, 0),
            (0, -1, -1, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
        ),
    )
