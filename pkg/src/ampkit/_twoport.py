# Copyright ampkit Developers.
# See LICENSE for details.

"""
Two-port network algebra.

S-parameters are the exchange format between modules; all combining of
networks happens in ABCD form at a single real reference impedance, where a
cascade is a plain matrix product.  Complex quantities are Python
``complex``.  Angles are degrees at every interface and radians inside.
"""

from cmath import rect, phase
from functools import reduce
from math import degrees, radians, log10, pi, cos, sin

import numpy

from pyrsistent import PClass, field

from ._exception import (
    DegenerateNetwork, FrequencyMismatch, StubSingularity, OpenCircuit,
)
from ._invariants import positive, optional, one_of
from . import _tolerance


def from_polar(magnitude, angle_deg):
    """
    Build a complex value from a magnitude and an angle in degrees.
    """
    return rect(magnitude, radians(angle_deg))


def to_polar(value):
    """
    Split a complex value into its magnitude and angle in degrees.

    :return tuple[float, float]: ``(magnitude, degrees)``, the angle in
        ``(-180, 180]``.
    """
    return abs(value), degrees(phase(value))


def db10(ratio):
    """
    Express a power ratio in decibels.
    """
    return 10 * log10(ratio)


def from_db10(decibels):
    return 10 ** (decibels / 10)


def db20(value):
    """
    Express the magnitude of a wave ratio in decibels.
    """
    return 20 * log10(abs(value))


def complex_field(**kw):
    """
    A mandatory pyrsistent field holding a ``complex``.
    """
    return field(type=complex, mandatory=True, factory=complex, **kw)


def real_field(**kw):
    """
    A mandatory pyrsistent field holding a ``float``.
    """
    return field(type=float, mandatory=True, factory=float, **kw)


def optional_real_field(invariant=None):
    def factory(value):
        if value is None:
            return None
        return float(value)
    extra = {}
    if invariant is not None:
        extra["invariant"] = optional(invariant)
    return field(
        type=(float, type(None)), mandatory=True, initial=None,
        factory=factory, **extra
    )



class TwoPortS(PClass):
    """
    The S-matrix of a two-port at a single frequency.

    :ivar float freq: Hz.
    :ivar complex s11: Input reflection.
    :ivar complex s12: Reverse transmission.
    :ivar complex s21: Forward transmission.
    :ivar complex s22: Output reflection.
    :ivar float z0: The real reference impedance, in ohms.
    """
    freq = real_field(invariant=positive(u"freq"))
    s11 = complex_field()
    s12 = complex_field()
    s21 = complex_field()
    s22 = complex_field()
    z0 = real_field(initial=50.0, invariant=positive(u"z0"))

    @classmethod
    def from_matrix(cls, freq, matrix, z0=50.0):
        """
        Build from a 2x2 ``[[s11, s12], [s21, s22]]`` array.
        """
        return cls(
            freq=freq,
            s11=matrix[0][0], s12=matrix[0][1],
            s21=matrix[1][0], s22=matrix[1][1],
            z0=z0,
        )


    def matrix(self):
        return numpy.array(
            [[self.s11, self.s12], [self.s21, self.s22]],
            dtype=complex,
        )


    def transposed(self):
        """
        The same network with its ports swapped.
        """
        return self.set(
            s11=self.s22, s22=self.s11,
            s12=self.s21, s21=self.s12,
        )



class AbcdMatrix(PClass):
    """
    The chain (ABCD) matrix of a two-port at a single frequency.

    ``a`` and ``d`` are dimensionless, ``b`` is in ohms and ``c`` in
    siemens.
    """
    a = complex_field()
    b = complex_field()
    c = complex_field()
    d = complex_field()
    freq = real_field(invariant=positive(u"freq"))

    @classmethod
    def identity(cls, freq):
        return cls(a=1, b=0, c=0, d=1, freq=freq)


    @classmethod
    def from_matrix(cls, freq, matrix):
        return cls(
            a=matrix[0][0], b=matrix[0][1],
            c=matrix[1][0], d=matrix[1][1],
            freq=freq,
        )


    def matrix(self):
        return numpy.array([[self.a, self.b], [self.c, self.d]], dtype=complex)


    def determinant(self):
        return self.a * self.d - self.b * self.c



SERIES_IMPEDANCE = u"series-impedance"
SHUNT_ADMITTANCE = u"shunt-admittance"
TRANSMISSION_LINE = u"transmission-line"
OPEN_STUB = u"open-stub"
SHORT_STUB = u"short-stub"

LUMPED_KINDS = frozenset({SERIES_IMPEDANCE, SHUNT_ADMITTANCE})
DISTRIBUTED_KINDS = frozenset({TRANSMISSION_LINE, OPEN_STUB, SHORT_STUB})

INDUCTOR = u"L"
CAPACITOR = u"C"
RESISTOR = u"R"


class ElementModel(PClass):
    """
    One lossless (or resistive) network element.

    Lumped elements have a ``component`` (``"L"`` in henries, ``"C"`` in
    farads, ``"R"`` in ohms) and a ``value``.  Lines and stubs have a
    characteristic impedance ``z0`` and an ``electrical_length`` in
    wavelengths.  If ``reference_frequency`` is set, the electrical length
    holds at that frequency and scales with frequency elsewhere (a fixed
    physical length); otherwise it holds at every frequency.
    """
    kind = field(
        type=str, mandatory=True,
        invariant=one_of(u"kind", LUMPED_KINDS | DISTRIBUTED_KINDS),
    )
    component = field(
        type=(str, type(None)), mandatory=True, initial=None,
        invariant=optional(one_of(u"component", {INDUCTOR, CAPACITOR, RESISTOR})),
    )
    value = optional_real_field(positive(u"value"))
    z0 = optional_real_field(positive(u"z0"))
    electrical_length = optional_real_field(positive(u"electrical_length"))
    reference_frequency = optional_real_field(positive(u"reference_frequency"))

    def __invariant__(self):
        if self.kind in LUMPED_KINDS:
            return (
                self.component is not None and self.value is not None,
                u"{} needs a component and a value".format(self.kind),
            )
        return (
            self.z0 is not None and self.electrical_length is not None,
            u"{} needs z0 and electrical_length".format(self.kind),
        )


    def describe(self):
        if self.kind in LUMPED_KINDS:
            where = u"series" if self.kind == SERIES_IMPEDANCE else u"shunt"
            unit, scale = {
                INDUCTOR: (u"nH", 1e9),
                CAPACITOR: (u"pF", 1e12),
                RESISTOR: (u"ohm", 1),
            }[self.component]
            return u"{} {} {:.4g} {}".format(
                where, self.component, self.value * scale, unit,
            )
        return u"{} {:.4f} wavelengths, z0 {:g} ohm".format(
            self.kind, self.electrical_length, self.z0,
        )



def series_inductor(inductance):
    return ElementModel(
        kind=SERIES_IMPEDANCE, component=INDUCTOR, value=inductance,
    )


def series_capacitor(capacitance):
    return ElementModel(
        kind=SERIES_IMPEDANCE, component=CAPACITOR, value=capacitance,
    )


def series_resistor(resistance):
    return ElementModel(
        kind=SERIES_IMPEDANCE, component=RESISTOR, value=resistance,
    )


def shunt_inductor(inductance):
    return ElementModel(
        kind=SHUNT_ADMITTANCE, component=INDUCTOR, value=inductance,
    )


def shunt_capacitor(capacitance):
    return ElementModel(
        kind=SHUNT_ADMITTANCE, component=CAPACITOR, value=capacitance,
    )


def shunt_resistor(resistance):
    return ElementModel(
        kind=SHUNT_ADMITTANCE, component=RESISTOR, value=resistance,
    )


def transmission_line(z0, electrical_length, reference_frequency=None):
    return ElementModel(
        kind=TRANSMISSION_LINE, z0=z0, electrical_length=electrical_length,
        reference_frequency=reference_frequency,
    )


def open_stub(z0, electrical_length, reference_frequency=None):
    return ElementModel(
        kind=OPEN_STUB, z0=z0, electrical_length=electrical_length,
        reference_frequency=reference_frequency,
    )


def short_stub(z0, electrical_length, reference_frequency=None):
    return ElementModel(
        kind=SHORT_STUB, z0=z0, electrical_length=electrical_length,
        reference_frequency=reference_frequency,
    )



def _lumped_immittance(element, omega):
    """
    The impedance of a series element or the admittance of a shunt element.
    """
    if element.component == RESISTOR:
        r = element.value
        return r if element.kind == SERIES_IMPEDANCE else 1 / r
    reactive = 1j * omega * element.value
    series = element.kind == SERIES_IMPEDANCE
    if (element.component == INDUCTOR) == series:
        # Inductor impedance or capacitor admittance.
        return reactive
    return 1 / reactive


def _electrical_angle(element, freq):
    """
    beta * length in radians.
    """
    length = element.electrical_length
    if element.reference_frequency is not None:
        length = length * freq / element.reference_frequency
    return 2 * pi * length


def element_to_abcd(element, freq):
    """
    The ABCD matrix of a single element at ``freq``.

    :raise StubSingularity: If a stub is within ``POLE`` of a tan/cot pole.
    """
    if element.kind == SERIES_IMPEDANCE:
        z = _lumped_immittance(element, 2 * pi * freq)
        return AbcdMatrix(a=1, b=z, c=0, d=1, freq=freq)
    if element.kind == SHUNT_ADMITTANCE:
        y = _lumped_immittance(element, 2 * pi * freq)
        return AbcdMatrix(a=1, b=0, c=y, d=1, freq=freq)

    theta = _electrical_angle(element, freq)
    zc = element.z0
    if element.kind == TRANSMISSION_LINE:
        return AbcdMatrix(
            a=cos(theta), b=1j * zc * sin(theta),
            c=1j * sin(theta) / zc, d=cos(theta),
            freq=freq,
        )
    if element.kind == OPEN_STUB:
        if abs(cos(theta)) < _tolerance.POLE:
            raise StubSingularity(element.kind, element.electrical_length)
        y = 1j * sin(theta) / (cos(theta) * zc)
    else:
        if abs(sin(theta)) < _tolerance.POLE:
            raise StubSingularity(element.kind, element.electrical_length)
        y = -1j * cos(theta) / (sin(theta) * zc)
    return AbcdMatrix(a=1, b=0, c=y, d=1, freq=freq)


def element_to_twoport(element, freq, z0):
    """
    The S-matrix of a single element at ``freq`` referenced to ``z0``.
    """
    return abcd_to_s(element_to_abcd(element, freq), z0)


def s_to_abcd(net):
    """
    Convert S-parameters to an ABCD matrix using the network's own ``z0``.

    :raise DegenerateNetwork: If ``s21`` vanishes.
    """
    s11, s12, s21, s22 = net.s11, net.s12, net.s21, net.s22
    if abs(s21) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"s21", abs(s21))
    z0 = net.z0
    denominator = 2 * s21
    return AbcdMatrix(
        a=((1 + s11) * (1 - s22) + s12 * s21) / denominator,
        b=z0 * ((1 + s11) * (1 + s22) - s12 * s21) / denominator,
        c=((1 - s11) * (1 - s22) - s12 * s21) / (denominator * z0),
        d=((1 - s11) * (1 + s22) + s12 * s21) / denominator,
        freq=net.freq,
    )


def abcd_to_s(m, z0):
    """
    Convert an ABCD matrix to S-parameters referenced to ``z0``.

    :raise DegenerateNetwork: If the conversion denominator vanishes.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    denominator = a + b / z0 + c * z0 + d
    if abs(denominator) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"a + b/z0 + c*z0 + d", abs(denominator))
    return TwoPortS(
        freq=m.freq,
        s11=(a + b / z0 - c * z0 - d) / denominator,
        s12=2 * (a * d - b * c) / denominator,
        s21=2 / denominator,
        s22=(-a + b / z0 - c * z0 + d) / denominator,
        z0=z0,
    )


def cascade(left, right):
    """
    Connect port 2 of ``left`` to port 1 of ``right``.

    :raise FrequencyMismatch: If the two matrices belong to different
        frequencies.
    """
    if abs(left.freq - right.freq) > _tolerance.FREQUENCY_MATCH_HZ:
        raise FrequencyMismatch(left.freq, right.freq)
    return AbcdMatrix.from_matrix(
        left.freq, numpy.dot(left.matrix(), right.matrix()),
    )


def cascade_all(first, *rest):
    """
    Cascade any number of ABCD matrices from port 1 to port 2.
    """
    return reduce(cascade, rest, first)


def flip(m):
    """
    The ABCD matrix of the same two-port driven from its other port.
    """
    det = m.determinant()
    if abs(det) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"ad - bc", abs(det))
    return AbcdMatrix(
        a=m.d / det, b=m.b / det, c=m.c / det, d=m.a / det, freq=m.freq,
    )


def gamma_to_z(gamma, z0):
    """
    The impedance with reflection coefficient ``gamma`` against ``z0``.

    :raise OpenCircuit: If ``gamma`` is 1.
    """
    if abs(1 - gamma) < _tolerance.ROUND_TRIP:
        raise OpenCircuit(gamma)
    return z0 * (1 + gamma) / (1 - gamma)


def z_to_gamma(z, z0):
    if abs(z + z0) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"z + z0", abs(z + z0))
    return (z - z0) / (z + z0)


def input_reflection(net, gamma_l):
    """
    The reflection coefficient looking into port 1 of ``net`` when port 2 is
    terminated by ``gamma_l``.
    """
    denominator = 1 - net.s22 * gamma_l
    if abs(denominator) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"1 - s22 * gamma_l", abs(denominator))
    return net.s11 + net.s12 * net.s21 * gamma_l / denominator


def output_reflection(net, gamma_s):
    """
    The reflection coefficient looking into port 2 of ``net`` when port 1 is
    terminated by ``gamma_s``.
    """
    denominator = 1 - net.s11 * gamma_s
    if abs(denominator) < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"1 - s11 * gamma_s", abs(denominator))
    return net.s22 + net.s12 * net.s21 * gamma_s / denominator
