"""
The rank two lattice acting on the plane, triangulated by a 3x3 grid of
vertices per fundamental domain. The quotient by m1Z x m2Z is a torus
triangulated by a (3 m1) x (3 m2) grid.
"""
from hdx.covers import CosetAction, GammaComplexData

DEFS = {
    'name': 'torus_z2',
    'command': 'torus',
    'help': 'triangulated torus, quotient of the plane by m1Z x m2Z',
    'params': {
        'm1': {'ptype': 'Integer', 'required': True},
        'm2': {'ptype': 'Integer', 'required': True},
    },
}

SIDE = 3


def _lift(x, y):
    """
    Decorated vertex of the grid point (x, y) of the plane, for
    0 <= x, y < 2 * SIDE.
    """
    return [1] * (x // SIDE) + [2] * (y // SIDE), SIDE * (x % SIDE) + y % SIDE


def datum():
    points = [(x, y) for x in range(SIDE) for y in range(SIDE)]
    vertices = [[([], SIDE * x + y)] for x, y in points]
    edges = []
    triangles = []
    for x, y in points:
        for dx, dy in ((1, 0), (0, 1), (1, 1)):
            edges.append([_lift(x, y), _lift(x + dx, y + dy)])
        triangles.append(
            [_lift(x, y), _lift(x + 1, y), _lift(x + 1, y + 1)]
        )
        triangles.append(
            [_lift(x, y), _lift(x, y + 1), _lift(x + 1, y + 1)]
        )
    return GammaComplexData(2, [vertices, edges, triangles])


def product_action(m1, m2):
    """
    Cosets (a, b) of m1Z x m2Z numbered ``a * m2 + b``, the first generator
    shifting a and the second one shifting b.
    """
    first = [((a + 1) % m1) * m2 + b for a in range(m1) for b in range(m2)]
    second = [a * m2 + (b + 1) % m2 for a in range(m1) for b in range(m2)]
    return CosetAction(
        [first, second],
        index=m1 * m2,
        label='torus_z2-%dx%d' % (m1, m2),
    )


def build(m1, m2):
    return datum(), product_action(m1, m2)
