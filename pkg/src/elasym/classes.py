"""Symmetry classes (conjugacy classes of closed subgroups of SO(3)) and their partial order."""

from enum import Enum


class SymmetryClass(Enum):
    """A conjugacy class of stabilizers; ``label`` is the public name, ``group`` the subgroup."""

    ISOTROPIC = ("isotropic", "SO(3)")
    CUBIC = ("cubic", "O")
    TRANSVERSELY_ISOTROPIC = ("transversely-isotropic", "O(2)")
    TETRAGONAL = ("tetragonal", "D4")
    TRIGONAL = ("trigonal", "D3")
    ORTHOTROPIC = ("orthotropic", "D2")
    MONOCLINIC = ("monoclinic", "Z2")
    TRICLINIC = ("triclinic", "1")
    # classes that occur for other tensor spaces but never for fourth-order harmonic tensors
    HEMITROPIC = ("hemitropic", "SO(2)")
    CYCLIC3 = ("cyclic-3", "Z3")
    CYCLIC4 = ("cyclic-4", "Z4")
    CYCLIC5 = ("cyclic-5", "Z5")
    DIHEDRAL5 = ("dihedral-5", "D5")
    TETRAHEDRAL = ("tetrahedral", "T")
    ICOSAHEDRAL = ("icosahedral", "I")

    def __init__(self, label: str, group: str):
        self.label = label
        self.group = group

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, name: str) -> "SymmetryClass":
        key = name.strip().lower().replace("_", "-").replace(" ", "-")
        for member in cls:
            if key in (member.label, member.group.lower(), member.name.lower().replace("_", "-")):
                return member
        raise ValueError(f"unknown symmetry class {name!r}")


S = SymmetryClass

ELASTICITY_CLASSES = (
    S.ISOTROPIC, S.CUBIC, S.TRANSVERSELY_ISOTROPIC, S.TETRAGONAL,
    S.TRIGONAL, S.ORTHOTROPIC, S.MONOCLINIC, S.TRICLINIC,
)
H4_CLASSES = ELASTICITY_CLASSES
FAMILY_CLASSES = (S.ISOTROPIC, S.TRANSVERSELY_ISOTROPIC, S.ORTHOTROPIC, S.MONOCLINIC, S.TRICLINIC)

# covering relations of the eight-class poset: key is a proper (conjugate) subgroup of each value
_COVERS = {
    S.TRICLINIC: (S.MONOCLINIC,),
    S.MONOCLINIC: (S.ORTHOTROPIC, S.TRIGONAL),
    S.ORTHOTROPIC: (S.TETRAGONAL,),
    S.TRIGONAL: (S.CUBIC, S.TRANSVERSELY_ISOTROPIC),
    S.TETRAGONAL: (S.CUBIC, S.TRANSVERSELY_ISOTROPIC),
    S.CUBIC: (S.ISOTROPIC,),
    S.TRANSVERSELY_ISOTROPIC: (S.ISOTROPIC,),
    S.ISOTROPIC: (),
}


def is_at_least(c: SymmetryClass, reference: SymmetryClass) -> bool:
    """True when ``reference`` <= ``c`` in the poset, i.e. ``c`` has at least that much symmetry."""
    if c == reference:
        return True
    return any(is_at_least(c, up) for up in _COVERS.get(reference, ()))
