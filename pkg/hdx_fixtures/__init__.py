"""
Fixture generators discovered by :mod:`hdx.fixtures`.

Each module exports ``DEFS``, the name of the fixture kind and the
description of its parameters, and ``build``, returning the equivariant
datum and the coset action of the requested subgroup.
"""
