# Copyright ampkit Developers.
# See LICENSE for details.

"""
Design configuration files.

A configuration is a TOML document.  ``[design]`` is required; every other
section is optional::

    [design]
    sparams = "bfp640.s2p"      # relative to this file, or absolute
    f0 = "3.2 GHz"
    z0 = 50
    network_style = "both"      # lumped, distributed or both
    stub = "open"               # open or short
    name = "bfp640-lna"         # output file stem

    [substrate]
    name = "RO4003C"
    eps_r = 3.38
    h_mm = 0.813
    t_um = 17

    [bias]
    v_supply = 5.0
    v_x = 1.5
    v_ce = 2.0
    i_c_ma = 20.0
    v_be = 0.8
    beta = 200
    k = 50
    series = "E24"              # exact, E12 or E24

    [noise]
    nf_min_db = 0.6
    gamma_opt_mag = 0.25
    gamma_opt_deg = 40
    rn = 8
    freq = "3.2 GHz"            # f0 if omitted

    [sweep]
    f_start = "3.0 GHz"
    f_stop = "3.4 GHz"
    n_points = 41
"""

import os
import re

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from twisted.python.filepath import FilePath

from pyrsistent import PClass, field, InvariantException

import numpy

from ._exception import ConfigurationError
from ._invariants import positive, one_of
from ._twoport import real_field, from_polar
from ._microstrip import Substrate
from ._bias import BiasSpec, SERIES, EXACT
from ._noise import NoiseParams
from ._synthesis import OPEN, SHORT

LUMPED = u"lumped"
DISTRIBUTED = u"distributed"
BOTH = u"both"

NETWORK_STYLES = frozenset({LUMPED, DISTRIBUTED, BOTH})

_UNITS = {
    u"": 1.0,
    u"hz": 1.0,
    u"khz": 1e3,
    u"mhz": 1e6,
    u"ghz": 1e9,
}

_FREQUENCY = re.compile(
    r"^\s*([-+]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)\s*([a-zA-Z]*)\s*$"
)


def parse_frequency(value, key=u"freq"):
    """
    Read a frequency given as a number of Hz or as text with a unit, like
    ``"3.2 GHz"`` or ``"3200MHz"``.

    :raise ConfigurationError: If ``value`` is not a positive frequency.

    :return float: Hz.
    """
    if isinstance(value, bool):
        raise ConfigurationError(key, u"{!r} is not a frequency".format(value))
    if isinstance(value, (int, float)):
        hz = float(value)
    else:
        match = _FREQUENCY.match(value)
        if match is None:
            raise ConfigurationError(key, u"{!r} is not a frequency".format(value))
        number, unit = match.groups()
        try:
            hz = float(number) * _UNITS[unit.lower()]
        except KeyError:
            raise ConfigurationError(
                key, u"unknown frequency unit {!r}".format(unit),
            )
    if not hz > 0:
        raise ConfigurationError(key, u"frequency must be positive")
    return hz



class Sweep(PClass):
    """
    An evenly spaced verification sweep, both ends included.
    """
    f_start = real_field(invariant=positive(u"f_start"))
    f_stop = real_field(invariant=positive(u"f_stop"))
    n_points = field(type=int, mandatory=True)

    def __invariant__(self):
        if self.n_points < 2:
            return (False, u"n_points must be at least 2")
        if not self.f_start < self.f_stop:
            return (False, u"f_start must be below f_stop")
        return (True, u"")


    def frequencies(self):
        return list(
            float(f)
            for f in numpy.linspace(self.f_start, self.f_stop, self.n_points)
        )



class DesignConfig(PClass):
    """
    Everything ``run_design`` needs.

    :ivar FilePath sparam_source: The device's Touchstone file.
    :ivar float f0: The design frequency, in Hz.
    :ivar unicode name: The stem of emitted report files.
    :ivar bias: A ``BiasSpec`` or ``None`` to skip the bias design.
    :ivar unicode bias_series: The preferred value series for the bias
        resistors.
    :ivar noise: ``NoiseParams`` or ``None``.
    :ivar sweep: A ``Sweep`` or ``None`` to verify at ``f0`` only.
    """
    sparam_source = field(type=FilePath, mandatory=True)
    f0 = real_field(invariant=positive(u"f0"))
    z0 = real_field(initial=50.0, invariant=positive(u"z0"))
    name = field(type=str, mandatory=True, initial=u"design")
    network_style = field(
        type=str, mandatory=True, initial=DISTRIBUTED,
        invariant=one_of(u"network_style", NETWORK_STYLES),
    )
    stub_kind = field(
        type=str, mandatory=True, initial=OPEN,
        invariant=one_of(u"stub", {OPEN, SHORT}),
    )
    substrate = field(type=Substrate, mandatory=True, initial=Substrate())
    bias = field(type=(BiasSpec, type(None)), mandatory=True, initial=None)
    bias_series = field(
        type=str, mandatory=True, initial=EXACT,
        invariant=one_of(u"series", SERIES),
    )
    noise = field(type=(NoiseParams, type(None)), mandatory=True, initial=None)
    sweep = field(type=(Sweep, type(None)), mandatory=True, initial=None)

    def wants_lumped(self):
        return self.network_style in (LUMPED, BOTH)


    def wants_distributed(self):
        return self.network_style in (DISTRIBUTED, BOTH)



_SECTIONS = {
    u"design": {u"sparams", u"f0", u"z0", u"network_style", u"stub", u"name"},
    u"substrate": {u"name", u"eps_r", u"h_mm", u"t_um"},
    u"bias": {
        u"v_supply", u"v_x", u"v_ce", u"i_c_ma", u"v_be", u"beta", u"k",
        u"series",
    },
    u"noise": {u"nf_min_db", u"gamma_opt_mag", u"gamma_opt_deg", u"rn", u"freq"},
    u"sweep": {u"f_start", u"f_stop", u"n_points"},
}

_REQUIRED = {
    u"design": {u"sparams", u"f0"},
    u"bias": {u"v_supply", u"v_x", u"v_ce", u"i_c_ma"},
    u"noise": {u"nf_min_db", u"gamma_opt_mag", u"gamma_opt_deg", u"rn"},
    u"sweep": {u"f_start", u"f_stop", u"n_points"},
}


def _check_keys(document):
    for section, values in document.items():
        if section not in _SECTIONS:
            raise ConfigurationError(section, u"unknown section")
        if not isinstance(values, dict):
            raise ConfigurationError(section, u"must be a section")
        for key in values:
            if key not in _SECTIONS[section]:
                raise ConfigurationError(
                    u"{}.{}".format(section, key), u"unknown key",
                )
        for key in sorted(_REQUIRED.get(section, set()) - set(values)):
            raise ConfigurationError(u"{}.{}".format(section, key), u"missing")
    if u"design" not in document:
        raise ConfigurationError(u"design", u"missing")


def _number(section, values, key):
    value = values[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationError(
            u"{}.{}".format(section, key),
            u"{!r} is not a number".format(value),
        )
    return float(value)


def _text(section, values, key):
    value = values[key]
    if not isinstance(value, str):
        raise ConfigurationError(
            u"{}.{}".format(section, key), u"{!r} is not text".format(value),
        )
    return value


def _numbers(section, values, keys):
    return {
        key: _number(section, values, key)
        for key in keys
        if key in values
    }


def _build(section, factory, **kw):
    try:
        return factory(**kw)
    except InvariantException as e:
        raise ConfigurationError(section, u"; ".join(
            str(message) for message in e.invariant_errors + e.missing_fields
        ))


def config_from_document(document, base):
    """
    Build a ``DesignConfig`` from a parsed TOML document.

    :param dict document: The parsed document.
    :param FilePath base: The directory relative paths are resolved in.
    """
    _check_keys(document)
    design = document[u"design"]
    fields = dict(
        sparam_source=FilePath(
            os.path.join(base.path, _text(u"design", design, u"sparams")),
        ),
        f0=parse_frequency(design[u"f0"], u"design.f0"),
    )
    if u"z0" in design:
        fields[u"z0"] = _number(u"design", design, u"z0")
    if u"name" in design:
        fields[u"name"] = _text(u"design", design, u"name")
    else:
        fields[u"name"] = fields[u"sparam_source"].splitext()[0].split(u"/")[-1]
    if u"network_style" in design:
        fields[u"network_style"] = _text(u"design", design, u"network_style")
    if u"stub" in design:
        fields[u"stub_kind"] = _text(u"design", design, u"stub")

    if u"substrate" in document:
        substrate = document[u"substrate"]
        kw = _numbers(u"substrate", substrate, (u"eps_r", u"h_mm", u"t_um"))
        if u"name" in substrate:
            kw[u"name"] = _text(u"substrate", substrate, u"name")
        fields[u"substrate"] = _build(u"substrate", Substrate, **kw)

    if u"bias" in document:
        bias = document[u"bias"]
        fields[u"bias"] = _build(u"bias", BiasSpec, **_numbers(
            u"bias", bias,
            (u"v_supply", u"v_x", u"v_ce", u"i_c_ma", u"v_be", u"beta", u"k"),
        ))
        if u"series" in bias:
            fields[u"bias_series"] = _text(u"bias", bias, u"series")

    if u"noise" in document:
        noise = document[u"noise"]
        fields[u"noise"] = _build(
            u"noise", NoiseParams.from_db,
            nf_min_db=_number(u"noise", noise, u"nf_min_db"),
            gamma_opt=from_polar(
                _number(u"noise", noise, u"gamma_opt_mag"),
                _number(u"noise", noise, u"gamma_opt_deg"),
            ),
            rn=_number(u"noise", noise, u"rn"),
            freq=parse_frequency(
                noise.get(u"freq", fields[u"f0"]), u"noise.freq",
            ),
        )

    if u"sweep" in document:
        sweep = document[u"sweep"]
        n_points = sweep[u"n_points"]
        if isinstance(n_points, bool) or not isinstance(n_points, int):
            raise ConfigurationError(u"sweep.n_points", u"must be an integer")
        fields[u"sweep"] = _build(
            u"sweep", Sweep,
            f_start=parse_frequency(sweep[u"f_start"], u"sweep.f_start"),
            f_stop=parse_frequency(sweep[u"f_stop"], u"sweep.f_stop"),
            n_points=n_points,
        )

    return _build(u"design", DesignConfig, **fields)


def parse_config(text, base):
    """
    Parse configuration text.

    :raise ConfigurationError: If the text is not a valid configuration.
    """
    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(u"toml", str(e))
    return config_from_document(document, base)


def load_config(path):
    """
    Load the configuration file at ``path``.

    :param FilePath path: The file.

    :return DesignConfig: The configuration.
    """
    try:
        text = path.getContent().decode("utf-8")
    except UnicodeDecodeError as e:
        raise ConfigurationError(u"toml", u"not UTF-8 text: " + e.reason)
    return parse_config(text, path.parent())
