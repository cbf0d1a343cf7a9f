""" Global application configuration.

The CLI fills the global ``config`` object from TOML files; library code reads
its limits through ``limit()`` so that an absent file or key falls back to the
values in ``defaults``.

"""
from pathlib import Path
from string import Template
import re
import tomllib

from .. import defaults
from .errors import InvalidInputError
from .logger import logger


__all__ = "config", "limit", "TomlConfig"


_LIMIT_DEFAULTS = {
    "term_budget": defaults.TERM_BUDGET,
    "table_cap": defaults.TABLE_CAP,
    "oracle_cap": defaults.ORACLE_CAP,
    "workers": defaults.WORKERS,
}


class _AttrDict(dict):
    """ A dict-like object with attribute access.

    """
    def __getitem__(self, key: str):
        """ Access dict values by key.

        :param key: key to retrieve
        """
        value = super().__getitem__(key)
        if isinstance(value, dict):
            # Nested tables must be _AttrDicts too for `config.limits.x`.
            self[key] = value = _AttrDict(value)
        return value

    def __getattr__(self, key: str) -> object:
        """ Get dict values as attributes.

        :param key: key to retrieve
        """
        try:
            return self[key]
        except KeyError as err:
            raise AttributeError(key) from err

    def __setattr__(self, key: str, value: object):
        """ Set dict values as attributes.

        :param key: key to set
        :param value: new value for key
        """
        self[key] = value
        return


class TomlConfig(_AttrDict):
    """ Store data from TOML configuration files.

    """
    def __init__(self, paths=None, root=None, params=None):
        """ Initialize this object.

        :param paths: one or more config file paths to load
        :param root: place config values at this root
        :param params: mapping of parameter substitutions
        """
        super().__init__()
        if paths:
            self.load(paths, root, params)
        return

    def load(self, paths, root=None, params=None):
        """ Load data from configuration files.

        Files are read in the given order, and a duplicate value overwrites
        the existing one. ``$name`` and ``${name}`` are replaced from
        ``params``; ``$$`` is a literal ``$``.

        :param paths: one or more config file paths to load
        :param root: place config values at this root
        :param params: mapping of parameter substitutions
        """
        try:
            paths = [Path(paths)]
        except TypeError:
            # Assume this is a sequence of paths.
            pass
        if params is None:
            params = {}
        comment = re.compile(r"\s*#.*$", re.MULTILINE)
        for path in paths:
            # Strip comments first so a stray `$` in one cannot break
            # substitution.
            try:
                with open(path, "rt", encoding="utf-8") as stream:
                    logger.info(f"Reading config data from '{path}'")
                    conf = comment.sub("", stream.read())
                data = tomllib.loads(Template(conf).substitute(params))
            except (KeyError, ValueError) as err:
                raise InvalidInputError(f"bad config file '{path}': {err}") from err
            _merge(self.setdefault(root, {}) if root else self, data)
        return


def _merge(target: dict, data: dict):
    """ Merge nested tables key by key; anything else in data replaces.

    """
    for key, value in data.items():
        current = dict.get(target, key)
        if isinstance(value, dict) and isinstance(current, dict):
            _merge(current, value)
        else:
            target[key] = value
    return


def limit(name: str, override=None) -> int:
    """ Resolve a positive integer limit.

    The explicit override wins, then ``[limits]`` in the global config, then
    the package default.

    :param name: one of term_budget, table_cap, oracle_cap, workers
    :param override: value given by the caller, if any
    """
    if override is not None:
        value = override
    else:
        value = config.get("limits", {}).get(name, _LIMIT_DEFAULTS[name])
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidInputError(f"limit {name} must be a positive integer, got {value!r}")
    return value


config = TomlConfig()
