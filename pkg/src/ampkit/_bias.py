# Copyright ampkit Developers.
# See LICENSE for details.

"""
DC bias of a grounded-emitter bipolar transistor with a four resistor
network::

    supply --R4-- collector
    supply --R2-- tap --R1-- ground
                  tap --R3-- base

The divider current through R1 is ``k`` times the base current, which keeps
the tap voltage insensitive to the base current.
"""

from math import isfinite, log10

import numpy

from pyrsistent import PClass, field, pvector_field

from eliot import Message

from ._exception import InfeasibleSpec, NoOperatingPoint
from ._invariants import positive, non_negative, one_of
from ._twoport import real_field

EXACT = u"exact"
E12 = u"E12"
E24 = u"E24"

PREFERRED_VALUES = {
    E12: numpy.array([1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2]),
    E24: numpy.array([
        1.0, 1.1, 1.2, 1.3, 1.5, 1.6, 1.8, 2.0, 2.2, 2.4, 2.7, 3.0,
        3.3, 3.6, 3.9, 4.3, 4.7, 5.1, 5.6, 6.2, 6.8, 7.5, 8.2, 9.1,
    ]),
}

SERIES = frozenset({EXACT}) | frozenset(PREFERRED_VALUES)

PLACEMENTS = (
    u"DC blocking capacitor between the 50 ohm source and the input "
    u"matching network",
    u"DC blocking capacitor between the output matching network and the "
    u"50 ohm load",
    u"RF choke or quarter-wave high impedance line from R3 to the base",
    u"RF choke or quarter-wave high impedance line from R4 to the collector",
    u"RF bypass capacitor from the divider tap to ground",
)


class BiasSpec(PClass):
    """
    The operating point to bias a transistor at.

    :ivar float v_supply: Supply voltage, in V.
    :ivar float v_x: Divider tap voltage, in V.
    :ivar float v_ce: Collector-emitter voltage, in V.
    :ivar float i_c_ma: Collector current, in mA.
    :ivar float v_be: Base-emitter voltage, in V.
    :ivar float beta: DC current gain.
    :ivar float k: Divider current as a multiple of the base current.
    """
    v_supply = real_field(invariant=positive(u"v_supply"))
    v_x = real_field(invariant=non_negative(u"v_x"))
    v_ce = real_field(invariant=positive(u"v_ce"))
    i_c_ma = real_field(invariant=positive(u"i_c_ma"))
    v_be = real_field(initial=0.8, invariant=non_negative(u"v_be"))
    beta = real_field(initial=200.0)
    k = real_field(initial=50.0, invariant=positive(u"k"))

    def __invariant__(self):
        if not self.v_supply > self.v_ce:
            return (False, u"v_supply must exceed v_ce")
        if not self.beta > 0:
            return (False, u"beta must be positive, not {!r}".format(self.beta))
        return (True, u"")



class BiasDesignResult(PClass):
    """
    A designed bias network and the operating point it produces.

    :ivar float r1: Tap to ground, in ohms.
    :ivar float r2: Supply to tap, in ohms.
    :ivar float r3: Tap to base, in ohms.
    :ivar float r4: Supply to collector, in ohms.
    :ivar float i_b_ma: Design base current.
    :ivar float i_x_ma: Design divider current through R1.
    :ivar float verified_v_x: The tap voltage the resistors actually give.
    :ivar float verified_ic_ma: The collector current they actually give.
    :ivar float verified_vce: The collector-emitter voltage they actually
        give.
    :ivar unicode series: The preferred value series the resistors were
        taken from.
    :ivar placements: Where RF/DC separation components belong.
    """
    spec = field(type=BiasSpec, mandatory=True)
    r1 = real_field(invariant=positive(u"r1"))
    r2 = real_field(invariant=positive(u"r2"))
    r3 = real_field(invariant=positive(u"r3"))
    r4 = real_field(invariant=non_negative(u"r4"))
    i_b_ma = real_field()
    i_x_ma = real_field()
    verified_v_x = real_field()
    verified_ic_ma = real_field()
    verified_vce = real_field()
    series = field(
        type=str, mandatory=True, initial=EXACT,
        invariant=one_of(u"series", SERIES),
    )
    placements = pvector_field(str)

    def resistors(self):
        return dict(r1=self.r1, r2=self.r2, r3=self.r3, r4=self.r4)


    def ic_drift(self):
        """
        The relative difference of the verified collector current from the
        specified one.
        """
        return self.verified_ic_ma / self.spec.i_c_ma - 1



def _resistance(name, volts, amps):
    value = volts / amps if amps > 0 else float(u"inf")
    if not (isfinite(value) and value > 0):
        raise InfeasibleSpec(name, value)
    return value


def design_bias(spec):
    """
    Choose the four resistors which set ``spec``.

    :raise InfeasibleSpec: If any resistor would be zero, negative or
        infinite.

    :return BiasDesignResult: The unrounded design with its verified
        operating point.
    """
    i_c = spec.i_c_ma / 1000
    i_b = i_c / spec.beta
    i_x = spec.k * i_b
    resistors = dict(
        r3=_resistance(u"r3", spec.v_x - spec.v_be, i_b),
        r1=_resistance(u"r1", spec.v_x, i_x),
        r2=_resistance(u"r2", spec.v_supply - spec.v_x, i_x + i_b),
        r4=_resistance(u"r4", spec.v_supply - spec.v_ce, i_c),
    )
    return _verified(BiasDesignResult(
        spec=spec,
        i_b_ma=i_b * 1000,
        i_x_ma=i_x * 1000,
        verified_v_x=0.0,
        verified_ic_ma=0.0,
        verified_vce=0.0,
        placements=PLACEMENTS,
        **resistors
    ))


def solve_tap_voltage(result, spec):
    """
    The divider tap voltage, from the tap node current balance.
    """
    conductance = 1 / result.r1 + 1 / result.r2 + 1 / result.r3
    return (spec.v_supply / result.r2 + spec.v_be / result.r3) / conductance


def verify_bias(result, spec):
    """
    Solve the DC operating point the resistors of ``result`` give.

    :raise NoOperatingPoint: If the transistor is cut off or saturated.

    :return tuple[float, float]: The collector current in mA and the
        collector-emitter voltage.
    """
    v_x = solve_tap_voltage(result, spec)
    if v_x <= spec.v_be:
        raise NoOperatingPoint(u"cutoff", v_x, None)
    i_c = spec.beta * (v_x - spec.v_be) / result.r3
    v_ce = spec.v_supply - i_c * result.r4
    if v_ce <= 0:
        raise NoOperatingPoint(u"saturation", v_x, v_ce)
    return i_c * 1000, v_ce


def _verified(result):
    ic_ma, vce = verify_bias(result, result.spec)
    return result.set(
        verified_v_x=solve_tap_voltage(result, result.spec),
        verified_ic_ma=ic_ma,
        verified_vce=vce,
    )


def nearest_preferred(value, series):
    """
    The value of ``series`` nearest to ``value`` on a logarithmic scale.
    """
    if series == EXACT:
        return value
    decade = 10 ** numpy.floor(log10(value))
    candidates = numpy.concatenate([
        PREFERRED_VALUES[series] * decade,
        [10 * decade],
    ])
    index = numpy.argmin(numpy.abs(numpy.log(candidates / value)))
    # Round to strip the representation error of the decade product.
    return float(round(candidates[index], 9))


def round_to_series(result, series):
    """
    Replace each resistor of ``result`` with its nearest preferred value and
    re-solve the operating point.

    :param unicode series: ``"E12"``, ``"E24"`` or ``"exact"``.

    :return BiasDesignResult: The rounded design.
    """
    if series == EXACT:
        return result
    rounded = _verified(result.set(
        series=series,
        **{
            name: nearest_preferred(value, series)
            for (name, value) in result.resistors().items()
            if value > 0
        }
    ))
    Message.log(
        message_type=u"ampkit:bias:rounded",
        series=series,
        resistors=rounded.resistors(),
        ic_ma=rounded.verified_ic_ma,
        ic_drift=rounded.ic_drift(),
    )
    return rounded
