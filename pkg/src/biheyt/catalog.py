"""Built-in named structures, so the regression commands need no
fixture files.

    chain3      the three-element chain 0 < 1 < 2
    threepoint  the space on {0,1,2} with opens ∅, {0}, {0,1}, X —
                the smallest space where ¬¬A = A fails (A = {0,1})
    sierpinski  two points, opens ∅, {0}, X (0 open, 1 closed)
    example1    reflexive-transitive 3-world model, V(p) = {w1};
                satisfies ◇p ∧ ◇¬p at w0
    example2    3-world model with R = {(0,1),(0,2),(1,1),(2,2)},
                V(p) = {w1}, V(q) = {w2}
"""

from __future__ import annotations

from .lattice import chain
from .modal import worked_examples
from .topology import validate_topology


def _builders():
    ex1, ex2 = worked_examples()
    return {
        "chain3": lambda: chain(3),
        "threepoint": lambda: validate_topology(3, [0b000, 0b001, 0b011, 0b111]),
        "sierpinski": lambda: validate_topology(2, [0b00, 0b01, 0b11]),
        "example1": lambda: ex1,
        "example2": lambda: ex2,
    }


NAMES = ("chain3", "threepoint", "sierpinski", "example1", "example2")


def builtin(name: str):
    """Return the named structure, or None if the name is not reserved."""
    table = _builders()
    if name in table:
        return table[name]()
    return None
