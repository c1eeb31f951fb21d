"""
Worked examples shipped with the package.

``s2_s1``
    The two-sphere with a rotation action (one two-sphere stratum).
``s2_t2``
    The same sphere under a rank-two torus whose codimension-one subtorus
    ``x = y`` acts trivially; congruences are taken modulo ``x - y``.
``cp2_s1``
    CP^2 with ``[z0:z1:z2] -> [t^-1 z0 : z1 : t z2]``; weights
    ``(x, 2x), (-x, x), (-2x, -x)``.
``cp3_t2``
    CP^3 with a rank-two torus: one four-dimensional component over the
    first three fixed points and three spheres to the fourth.
``su3_reduced``
    Circle reduction of a generic SU(3) coadjoint orbit; weights
    ``(x, x), (x, -x), (x, -x), (-x, -x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..model import GkmSpace, load


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    expected_hilbert: tuple[int, ...]  # h_0..h_5
    expected_betti: tuple[int, ...]

    def document(self) -> str:
        return resources.files(__name__).joinpath(f"{self.name}.json").read_text()

    def space(self) -> GkmSpace:
        return load(self.document())


CORPUS: dict[str, CorpusEntry] = {
    e.name: e
    for e in [
        CorpusEntry("s2_s1", "S^2 with the rotation circle action",
                    (1, 2, 2, 2, 2, 2), (1, 1)),
        CorpusEntry("s2_t2", "S^2 with a rank-2 torus, kernel form of the congruence",
                    (1, 3, 5, 7, 9, 11), (1, 1)),
        CorpusEntry("cp2_s1", "CP^2 with a Hamiltonian circle action",
                    (1, 2, 3, 3, 3, 3), (1, 1, 1)),
        CorpusEntry("cp3_t2", "CP^3 with a Hamiltonian T^2 action",
                    (1, 3, 6, 10, 14, 18), (1, 1, 1, 1)),
        CorpusEntry("su3_reduced", "circle reduction of a generic SU(3) coadjoint orbit",
                    (1, 3, 4, 4, 4, 4), (1, 2, 1)),
    ]
}


def names() -> list[str]:
    return list(CORPUS)


def get(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(CORPUS)}") from None
