"""
Discovery of the fixture generators of :mod:`hdx_fixtures` and the fixture
specifications accepted by the command line.
"""
import logging
import os.path
import pkgutil
from dataclasses import dataclass, field

from .errors import InvalidParameter
from .serialization import load_action, load_gamma

try:
    import hdx_fixtures
    PKG_PATH = os.path.dirname(hdx_fixtures.__file__)
    FIXTURE_MODULES = [
        name for _, name, _ in pkgutil.iter_modules([PKG_PATH])
    ]
except ImportError:
    FIXTURE_MODULES = []

logger = logging.getLogger(__name__)

PTYPES = {
    'Integer': int,
    'String': str,
}


def load_fixtures():
    """
    Imports every fixture module and indexes them by fixture kind.

    :return: dict mapping ``DEFS['name']`` to the imported module
    """
    fixtures = {}
    for name in (fx for fx in FIXTURE_MODULES if not fx.startswith('_')):
        try:
            module = __import__(
                'hdx_fixtures.' + name,
                globals(),
                locals(),
                ['DEFS', 'build'],
            )
        except ImportError:
            logger.error('Unable to import fixture module %s', name)
            continue
        fixtures[module.DEFS['name']] = module
    return fixtures


def _convert_params(defs, params):
    converted = {}
    for name, pdef in defs['params'].items():
        if name not in params or params[name] is None:
            if pdef.get('required', False):
                raise InvalidParameter(
                    name, 'Missing parameter %s for fixture %s' % (
                        name, defs['name'],
                    ),
                )
            continue
        ptype = PTYPES[pdef['ptype']]
        try:
            value = ptype(params[name])
        except (TypeError, ValueError):
            raise InvalidParameter(
                params[name], 'Parameter %s must be %s' % (
                    name, pdef['ptype'],
                ),
            )
        if ptype is int and value < 1:
            raise InvalidParameter(
                value, 'Parameter %s must be at least 1, got %d' % (
                    name, value,
                ),
            )
        converted[name] = value
    unknown = set(params) - set(defs['params'])
    if unknown:
        raise InvalidParameter(
            sorted(unknown), 'Unknown parameters %s for fixture %s' % (
                ', '.join(sorted(unknown)), defs['name'],
            ),
        )
    return converted


def build_fixture(kind, **params):
    """
    :param kind: fixture kind, the ``DEFS['name']`` of its module
    :return: tuple (datum, action)
    :raises InvalidParameter: on unknown kinds or bad parameters
    """
    fixtures = load_fixtures()
    if kind not in fixtures:
        raise InvalidParameter(kind, 'Unknown fixture kind %s' % kind)
    module = fixtures[kind]
    return module.build(**_convert_params(module.DEFS, params))


def fixture_cycle_z(m):
    return build_fixture('cycle_z', m=m)


def fixture_torus_z2(m1, m2):
    return build_fixture('torus_z2', m1=m1, m2=m2)


@dataclass(frozen=True)
class FixtureSpec(object):
    """
    A fixture to load, either generated (``cycle_z``, ``torus_z2``) or read
    from a datum file and action files (``from_files``).
    """
    kind: str
    params: dict = field(default_factory=dict, hash=False)
    paths: tuple = ()

    def __post_init__(self):
        if self.kind == 'from_files':
            if not self.paths:
                raise InvalidParameter(
                    self.paths, 'from_files fixtures need a datum path'
                )
        elif self.kind not in load_fixtures():
            raise InvalidParameter(
                self.kind, 'Unknown fixture kind %s' % self.kind
            )

    def load(self):
        """
        :return: tuple (datum, list of actions)
        """
        if self.kind != 'from_files':
            datum, action = build_fixture(self.kind, **self.params)
            return datum, [action]

        for path in self.paths:
            if not os.path.exists(path):
                raise InvalidParameter(path, 'No such file %s' % path)
        datum = load_gamma(self.paths[0])
        return datum, [load_action(path) for path in self.paths[1:]]
