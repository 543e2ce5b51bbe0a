# Copyright ampkit Developers.
# See LICENSE for details.

"""
Synthesis of matching networks.

A matching network sits between a reference-impedance port (port 1, the
50 ohm source or load) and the transistor (port 2).  It is synthesized so
that, with port 1 terminated in the reference impedance, the reflection
seen looking back into port 2 is a prescribed ``target``.

Two families are supported:

* two-element lumped L-sections, with the shunt element at the port or the
  series element at the port;
* a single shunt stub (open by default) at the port followed by a series
  line toward the transistor.

Every solution is analysed again after synthesis; its ``achieved_gamma`` is
computed from its elements, never copied from the target.
"""

from cmath import phase
from math import atan, pi, sqrt

from zope.interface import implementer

from pyrsistent import PClass, field, pvector_field

from eliot import Message

from ._exception import (
    AlreadyMatched, NoRealizableSection, NoSolution, ReflectionOutOfDisk,
)
from ._interface import IMatchingNetwork
from ._invariants import positive, one_of
from ._twoport import (
    ElementModel, AbcdMatrix, complex_field, real_field,
    element_to_abcd, abcd_to_s, cascade, gamma_to_z,
    series_inductor, series_capacitor, shunt_inductor, shunt_capacitor,
    transmission_line, open_stub, short_stub, to_polar,
)
from . import _tolerance

SHUNT_FIRST = u"shunt-first"
SERIES_FIRST = u"series-first"

OPEN = u"open"
SHORT = u"short"

STUB_AT_PORT_THEN_LINE = u"stub-at-port-then-line"

# Immittances this small (relative to the reference) are left out rather
# than realized as absurd component values.
_NEGLIGIBLE = 1e-9


def _wavelengths(name, low_open, high_closed):
    def check(value):
        low_ok = value > 0 if low_open else value >= 0
        high_ok = value <= 0.5 if high_closed else value < 0.5
        return (
            low_ok and high_ok,
            u"{} must be a fraction of a half wavelength, not {!r}".format(
                name, value,
            ),
        )
    return check



@implementer(IMatchingNetwork)
class LumpedSolution(PClass):
    """
    A lumped L-section.

    :ivar unicode topology: ``"shunt-first"`` if the shunt element is at the
        port, ``"series-first"`` if the series element is.
    :ivar network: The elements from the port to the transistor.  A
        section on a constant resistance or conductance circle has only one.
    :ivar float z0: The reference impedance the network was designed for.
    """
    topology = field(
        type=str, mandatory=True,
        invariant=one_of(u"topology", {SHUNT_FIRST, SERIES_FIRST}),
    )
    network = pvector_field(ElementModel)
    z0 = real_field(invariant=positive(u"z0"))
    target = complex_field()
    achieved_gamma = complex_field()
    residual = real_field()
    design_frequency = real_field(invariant=positive(u"design_frequency"))

    def elements(self):
        return tuple(self.network)


    def describe(self):
        return u"{}: {}".format(
            self.topology,
            u", ".join(element.describe() for element in self.network),
        )



@implementer(IMatchingNetwork)
class StubSolution(PClass):
    """
    A single shunt stub at the port followed by a series line toward the
    transistor.  Both have characteristic impedance ``z0`` and lengths in
    wavelengths at ``design_frequency``.
    """
    stub_len = real_field(invariant=_wavelengths(u"stub_len", True, True))
    line_len = real_field(invariant=_wavelengths(u"line_len", False, False))
    stub_kind = field(
        type=str, mandatory=True, initial=OPEN,
        invariant=one_of(u"stub_kind", {OPEN, SHORT}),
    )
    topology = field(
        type=str, mandatory=True, initial=STUB_AT_PORT_THEN_LINE,
        invariant=one_of(u"topology", {STUB_AT_PORT_THEN_LINE}),
    )
    z0 = real_field(invariant=positive(u"z0"))
    target = complex_field()
    achieved_gamma = complex_field()
    residual = real_field()
    design_frequency = real_field(invariant=positive(u"design_frequency"))

    @classmethod
    def from_lengths(cls, stub_len, line_len, z0, design_frequency,
                     stub_kind=OPEN, target=None):
        """
        Describe an existing stub network and analyse it.

        :param target: The reflection it is meant to present; the achieved
            reflection if omitted.
        """
        solution = cls(
            stub_len=stub_len, line_len=line_len, stub_kind=stub_kind, z0=z0,
            target=0j, achieved_gamma=0j, residual=0.0,
            design_frequency=design_frequency,
        )
        return _analysed(solution, target, z0)


    def total_length(self):
        return self.stub_len + self.line_len


    def elements(self):
        make_stub = open_stub if self.stub_kind == OPEN else short_stub
        elements = [make_stub(self.z0, self.stub_len, self.design_frequency)]
        if self.line_len > 0:
            elements.append(transmission_line(
                self.z0, self.line_len, self.design_frequency,
            ))
        return tuple(elements)


    def describe(self):
        return (
            u"{} stub {:.4f} wavelengths at the port, "
            u"line {:.4f} wavelengths toward the device".format(
                self.stub_kind, self.stub_len, self.line_len,
            )
        )



def network_abcd(network, freq):
    """
    The ABCD matrix of an ``IMatchingNetwork`` at ``freq``, port 1 first.
    """
    result = AbcdMatrix.identity(freq)
    for element in network.elements():
        result = cascade(result, element_to_abcd(element, freq))
    return result


def verify_network(solution, z0, freq):
    """
    Analyse a matching network.

    :param IMatchingNetwork solution: The network.
    :param float z0: The impedance terminating port 1.
    :param float freq: The frequency to analyse at.

    :return complex: The reflection looking back into port 2.
    """
    return abcd_to_s(network_abcd(solution, freq), z0).s22


def _analysed(solution, target, z0):
    achieved = verify_network(solution, z0, solution.design_frequency)
    if target is None:
        target = achieved
    return solution.set(
        target=target,
        achieved_gamma=achieved,
        residual=abs(achieved - target),
    )


def _check_target(target):
    if not abs(target) < 1:
        raise ReflectionOutOfDisk(u"target", target)
    if abs(target) < _tolerance.ROUND_TRIP:
        raise AlreadyMatched(target)


def _accept(solution):
    if solution.residual > _tolerance.MATCH_RESIDUAL:
        raise NoSolution(solution.target, solution.residual)
    magnitude, angle = to_polar(solution.target)
    Message.log(
        message_type=u"ampkit:synthesis:solution",
        target_magnitude=magnitude,
        target_degrees=angle,
        network=solution.describe(),
        residual=solution.residual,
    )
    return solution


def _series(reactance, omega):
    if reactance > 0:
        return series_inductor(reactance / omega)
    return series_capacitor(-1 / (omega * reactance))


def _shunt(susceptance, omega):
    if susceptance > 0:
        return shunt_capacitor(susceptance / omega)
    return shunt_inductor(-1 / (omega * susceptance))


def _plus_minus(radicand):
    root = sqrt(radicand)
    if root == 0:
        return [0.0]
    return [root, -root]


def synth_l_section(target, z0, freq, topology):
    """
    The L-sections of one topology which present ``target``.

    :raise NoRealizableSection: If the topology cannot reach ``target``.

    :return list[LumpedSolution]: One or two solutions.
    """
    _check_target(target)
    omega = 2 * pi * freq
    z_target = gamma_to_z(target, z0)
    g0 = 1 / z0

    sections = []
    if topology == SHUNT_FIRST:
        r, x = z_target.real, z_target.imag
        radicand = g0 * (1 / r - g0)
        if radicand < 0:
            raise NoRealizableSection(topology, radicand)
        for b in _plus_minus(radicand):
            reactance = x + b * r / g0
            network = []
            if abs(b) > _NEGLIGIBLE * g0:
                network.append(_shunt(b, omega))
            if abs(reactance) > _NEGLIGIBLE * z0:
                network.append(_series(reactance, omega))
            sections.append(network)
    elif topology == SERIES_FIRST:
        y_target = 1 / z_target
        g, b_target = y_target.real, y_target.imag
        radicand = z0 / g - z0 ** 2
        if radicand < 0:
            raise NoRealizableSection(topology, radicand)
        for x in _plus_minus(radicand):
            susceptance = b_target + x * g / z0
            network = []
            if abs(x) > _NEGLIGIBLE * z0:
                network.append(_series(x, omega))
            if abs(susceptance) > _NEGLIGIBLE * g0:
                network.append(_shunt(susceptance, omega))
            sections.append(network)
    else:
        raise ValueError(u"unknown L-section topology {!r}".format(topology))

    solutions = []
    for network in sections:
        solution = _analysed(
            LumpedSolution(
                topology=topology, network=network, z0=z0,
                target=target, achieved_gamma=0j, residual=0.0,
                design_frequency=freq,
            ),
            target,
            z0,
        )
        if solution not in solutions:
            solutions.append(_accept(solution))
    return solutions


def synth_lumped(target, z0, freq):
    """
    Every lumped L-section which presents ``target`` at ``freq``.

    Shunt-first sections come before series-first ones; within a topology
    the section with the positive shunt susceptance (or series reactance)
    comes first.

    :raise AlreadyMatched: If ``target`` is 0.
    :raise NoRealizableSection: If neither topology can reach ``target``.

    :return list[LumpedSolution]: Two or four solutions away from the
        constant resistance and conductance circles through the center.
    """
    _check_target(target)
    solutions = []
    failures = []
    for topology in (SHUNT_FIRST, SERIES_FIRST):
        try:
            solutions.extend(synth_l_section(target, z0, freq, topology))
        except NoRealizableSection as e:
            failures.append(e)
    if not solutions:
        raise failures[0]
    return solutions


def _stub_length(stub_kind, susceptance):
    """
    The stub length in (0, 0.5] wavelengths with normalized input
    susceptance ``susceptance``.
    """
    if stub_kind == OPEN:
        length = atan(susceptance) / (2 * pi)
    else:
        length = atan(-1 / susceptance) / (2 * pi)
    length %= 0.5
    return length if length > 0 else 0.5


def synth_single_stub(target, z0, freq=1.0, stub_kind=OPEN):
    """
    Every single-stub network which presents ``target``.

    The lengths are fractions of a wavelength and do not depend on ``freq``,
    which only records the frequency they are referenced to.

    :raise AlreadyMatched: If ``target`` is 0.
    :raise NoSolution: If a solution misses ``target`` by more than
        ``MATCH_RESIDUAL``.

    :return list[StubSolution]: Both solutions, shortest total length first.
    """
    _check_target(target)
    magnitude = abs(target)
    # The stub and the port termination together must reflect with the
    # target's magnitude; the line then only turns the phase.
    b_magnitude = 2 * magnitude / sqrt(1 - magnitude ** 2)

    solutions = []
    for b in (b_magnitude, -b_magnitude):
        node_gamma = -1j * b / (2 + 1j * b)
        line_len = ((phase(node_gamma) - phase(target)) / (4 * pi)) % 0.5
        if line_len >= 0.5:
            # A tiny negative angle wraps onto the excluded upper end.
            line_len = 0.0
        solution = StubSolution.from_lengths(
            stub_len=_stub_length(stub_kind, b),
            line_len=line_len,
            z0=z0,
            design_frequency=freq,
            stub_kind=stub_kind,
            target=target,
        )
        solutions.append(_accept(solution))
    return sorted(solutions, key=StubSolution.total_length)
