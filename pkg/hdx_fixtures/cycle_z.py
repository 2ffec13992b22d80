"""
The integers acting on the line, triangulated with three vertices per unit
of translation. The quotient by mZ is the cycle with 3m vertices.
"""
from hdx.covers import CosetAction, GammaComplexData

DEFS = {
    'name': 'cycle_z',
    'command': 'cycle',
    'help': 'cycle with 3m vertices, quotient of the line by mZ',
    'params': {
        'm': {'ptype': 'Integer', 'required': True},
    },
}


def datum():
    return GammaComplexData(1, [
        [[([], 0)], [([], 1)], [([], 2)]],
        [
            [([], 0), ([], 1)],
            [([], 1), ([], 2)],
            [([], 2), ([1], 0)],
        ],
    ])


def build(m):
    return datum(), CosetAction.cyclic(m, label='cycle_z-%d' % m)
