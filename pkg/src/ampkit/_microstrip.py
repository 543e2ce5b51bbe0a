# Copyright ampkit Developers.
# See LICENSE for details.

"""
Microstrip lines.

Characteristic impedance and effective permittivity come from the quasi-static
closed forms of Hammerstad and Jensen with their conductor thickness
correction.  There is no dispersion or loss model; at a few GHz on sub-mm
laminates the quasi-static values are what a layout is drawn from.
"""

from math import cosh, e, exp, log, pi, sqrt, tanh

from scipy.constants import c as SPEED_OF_LIGHT, mu_0
from scipy.optimize import brentq

from pyrsistent import PClass, field

from ._exception import AspectRatioOutOfRange, TargetOutOfRange
from ._invariants import positive, non_negative
from ._twoport import real_field, optional_real_field

FREE_SPACE_IMPEDANCE = mu_0 * SPEED_OF_LIGHT

MIN_ASPECT_RATIO = 0.01
MAX_ASPECT_RATIO = 100.0

MIN_SYNTHESIS_Z0 = 10.0
MAX_SYNTHESIS_Z0 = 200.0


def _at_least_one(name):
    def check(value):
        return (value >= 1, u"{} must be at least 1, not {!r}".format(name, value))
    return check


class Substrate(PClass):
    """
    A microstrip laminate.

    :ivar float eps_r: Relative permittivity; 1 for air.
    :ivar float h_mm: Dielectric height, in mm.
    :ivar float t_um: Conductor thickness, in um.
    """
    name = field(type=str, mandatory=True, initial=u"RO4003C")
    eps_r = real_field(initial=3.38, invariant=_at_least_one(u"eps_r"))
    h_mm = real_field(initial=0.813, invariant=positive(u"h_mm"))
    t_um = real_field(initial=17.0, invariant=non_negative(u"t_um"))

    @classmethod
    def ro4003c(cls):
        """
        Rogers RO4003C, 32 mil, half-ounce copper.
        """
        return cls()


    @classmethod
    def air(cls, h_mm):
        return cls(name=u"air", eps_r=1.0, h_mm=h_mm, t_um=0.0)



class MicrostripLine(PClass):
    """
    A physical microstrip line.

    :ivar float w_mm: Strip width.
    :ivar float length_mm: Physical length; 0 for a width-only synthesis.
    :ivar float z0: Characteristic impedance in ohms.
    :ivar float eps_eff: Effective permittivity.
    :ivar electrical_length: The length in wavelengths it realizes, or
        ``None``.
    :ivar freq: The frequency ``electrical_length`` holds at, or ``None``.
    """
    w_mm = real_field(invariant=positive(u"w_mm"))
    length_mm = real_field(initial=0.0, invariant=non_negative(u"length_mm"))
    substrate = field(type=Substrate, mandatory=True)
    z0 = real_field(invariant=positive(u"z0"))
    eps_eff = real_field(invariant=_at_least_one(u"eps_eff"))
    electrical_length = optional_real_field(non_negative(u"electrical_length"))
    freq = optional_real_field(positive(u"freq"))

    def __invariant__(self):
        return (
            self.eps_eff <= self.substrate.eps_r,
            u"eps_eff {!r} exceeds eps_r {!r}".format(
                self.eps_eff, self.substrate.eps_r,
            ),
        )



def _air_impedance(u):
    """
    The characteristic impedance of the strip with air dielectric at width
    to height ratio ``u``.
    """
    f = 6 + (2 * pi - 6) * exp(-((30.666 / u) ** 0.7528))
    return FREE_SPACE_IMPEDANCE / (2 * pi) * log(f / u + sqrt(1 + (2 / u) ** 2))


def _effective_permittivity(u, eps_r):
    a = (
        1 +
        log((u ** 4 + (u / 52) ** 2) / (u ** 4 + 0.432)) / 49 +
        log(1 + (u / 18.1) ** 3) / 18.7
    )
    b = 0.564 * ((eps_r - 0.9) / (eps_r + 3)) ** 0.053
    return (eps_r + 1) / 2 + (eps_r - 1) / 2 * (1 + 10 / u) ** (-a * b)


def analyze(w_mm, sub, freq=None):
    """
    The characteristic impedance and effective permittivity of a strip
    ``w_mm`` wide on ``sub``.

    :param freq: Ignored; the model is quasi-static.

    :raise AspectRatioOutOfRange: If ``w_mm / sub.h_mm`` is outside of
        ``[0.01, 100]``.

    :return tuple[float, float]: ``(z0, eps_eff)``.
    """
    u = w_mm / sub.h_mm
    if not MIN_ASPECT_RATIO <= u <= MAX_ASPECT_RATIO:
        raise AspectRatioOutOfRange(u)

    t = sub.t_um / 1000 / sub.h_mm
    if t > 0:
        coth = 1 / tanh(sqrt(6.517 * u))
        du_air = t / pi * log(1 + 4 * e / (t * coth ** 2))
        du_dielectric = du_air / 2 * (1 + 1 / cosh(sqrt(sub.eps_r - 1)))
        u_air = u + du_air
        u_dielectric = u + du_dielectric
    else:
        u_air = u_dielectric = u

    eps = _effective_permittivity(u_dielectric, sub.eps_r)
    z0 = _air_impedance(u_dielectric) / sqrt(eps)
    eps_eff = eps * (_air_impedance(u_air) / _air_impedance(u_dielectric)) ** 2
    return z0, eps_eff


def synthesize(z0_target, sub, freq=None):
    """
    The strip width with characteristic impedance ``z0_target`` on ``sub``.

    :raise TargetOutOfRange: If ``z0_target`` is outside of 10 to 200 ohms
        or not reachable within the supported aspect ratios.

    :return MicrostripLine: A line of zero length.
    """
    narrowest = MIN_ASPECT_RATIO * sub.h_mm
    widest = MAX_ASPECT_RATIO * sub.h_mm
    low = analyze(widest, sub)[0]
    high = analyze(narrowest, sub)[0]
    if not (
        MIN_SYNTHESIS_Z0 <= z0_target <= MAX_SYNTHESIS_Z0 and
        low <= z0_target <= high
    ):
        raise TargetOutOfRange(z0_target, low, high)

    w_mm = brentq(
        lambda w: analyze(w, sub)[0] - z0_target,
        narrowest, widest,
        xtol=1e-12, rtol=1e-12,
    )
    z0, eps_eff = analyze(w_mm, sub)
    return MicrostripLine(w_mm=w_mm, substrate=sub, z0=z0, eps_eff=eps_eff)


def electrical_to_physical(len_frac, eps_eff, freq):
    """
    The physical length, in mm, of ``len_frac`` guided wavelengths.
    """
    return len_frac * SPEED_OF_LIGHT / (freq * sqrt(eps_eff)) * 1000


def physical_to_electrical(length_mm, eps_eff, freq):
    return length_mm / 1000 * sqrt(eps_eff) * freq / SPEED_OF_LIGHT


def _with_length(line, len_frac, freq):
    return line.set(
        length_mm=electrical_to_physical(len_frac, line.eps_eff, freq),
        electrical_length=len_frac,
        freq=freq,
    )


def realize_stub_network(sol, sub, freq=None):
    """
    Lay out a single-stub matching network on ``sub``.

    The line and the stub share the width for ``sol.z0``; T-junction effects
    are ignored.

    :param StubSolution sol: The network.
    :param freq: The frequency the lengths hold at; the solution's design
        frequency by default.

    :return tuple[MicrostripLine, MicrostripLine]: ``(line, stub)``.
    """
    if freq is None:
        freq = sol.design_frequency
    width = synthesize(sol.z0, sub, freq)
    return (
        _with_length(width, sol.line_len, freq),
        _with_length(width, sol.stub_len, freq),
    )
