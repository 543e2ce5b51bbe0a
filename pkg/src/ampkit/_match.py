# Copyright ampkit Developers.
# See LICENSE for details.

"""
Simultaneous conjugate matching and the transducer gain of a terminated
two-port.
"""

from cmath import phase
from math import inf, sqrt

from pyrsistent import PClass, field

from ._exception import (
    PotentiallyUnstable, NegativeDiscriminant, InconsistentMatch,
    ReflectionOutOfDisk, DegenerateNetwork, UnilateralDevice,
)
from ._invariants import inside_unit_disk, non_negative
from ._twoport import (
    complex_field, real_field, input_reflection, output_reflection, db10,
)
from ._stability import classify, delta, k_factor
from . import _tolerance

_INFINITE_ROOT = complex(inf, 0)


def _root_pair(roots):
    return (
        isinstance(roots, tuple) and len(roots) == 2,
        u"roots must be a pair, not {!r}".format(roots),
    )


class GainBlocks(PClass):
    """
    The transducer gain of a terminated two-port split into a source
    mismatch factor, the intrinsic device gain and a load mismatch factor.
    All are linear power ratios.
    """
    gs = real_field(invariant=non_negative(u"gs"))
    g0 = real_field(invariant=non_negative(u"g0"))
    gl = real_field(invariant=non_negative(u"gl"))
    gt = real_field(invariant=non_negative(u"gt"))

    def __invariant__(self):
        product = self.gs * self.g0 * self.gl
        return (
            abs(product - self.gt) <= 1e-9 * max(abs(self.gt), 1e-300),
            u"gt {!r} is not gs * g0 * gl = {!r}".format(self.gt, product),
        )


    def in_db(self):
        """
        :return dict: Each block in dB.
        """
        return {
            name: db10(getattr(self, name))
            for name in (u"gs", u"g0", u"gl", u"gt")
        }



class MatchDesign(PClass):
    """
    The simultaneous conjugate match of a two-port.

    :ivar gamma_s_roots: Both roots of the source quadratic, smaller
        magnitude first.  For an unconditionally stable device the first is
        inside the unit disk and the second outside it.
    :ivar gamma_l_roots: Likewise for the load.
    :ivar complex gamma_s: The selected source reflection coefficient.
    :ivar complex gamma_l: The selected load reflection coefficient.
    :ivar float b1: Source quadratic coefficient.
    :ivar float b2: Load quadratic coefficient.
    :ivar complex c1: Source quadratic coefficient.
    :ivar complex c2: Load quadratic coefficient.
    :ivar GainBlocks gains: The gain decomposition at the match.
    """
    gamma_s_roots = field(type=tuple, mandatory=True, invariant=_root_pair)
    gamma_l_roots = field(type=tuple, mandatory=True, invariant=_root_pair)
    gamma_s = complex_field(invariant=inside_unit_disk(u"gamma_s"))
    gamma_l = complex_field(invariant=inside_unit_disk(u"gamma_l"))
    b1 = real_field()
    b2 = real_field()
    c1 = complex_field()
    c2 = complex_field()
    gains = field(type=GainBlocks, mandatory=True)

    def __invariant__(self):
        for roots in (self.gamma_s_roots, self.gamma_l_roots):
            first, second = roots
            if _INFINITE_ROOT in (first, second):
                continue
            if abs(abs(first) * abs(second) - 1) > 1e-6:
                return (
                    False,
                    u"root magnitudes {!r} do not multiply to 1".format(roots),
                )
        return (True, u"")



def _quadratic_roots(port, b, c):
    """
    The roots of ``c * g**2 - b * g + conj(c) = 0``, smaller magnitude first.
    """
    if abs(c) < _tolerance.DENOMINATOR:
        return (0j, _INFINITE_ROOT)
    discriminant = b ** 2 - 4 * abs(c) ** 2
    if discriminant < 0:
        raise NegativeDiscriminant(port, discriminant)
    root = sqrt(discriminant)
    candidates = [(b - root) / (2 * c), (b + root) / (2 * c)]
    return tuple(sorted(candidates, key=_selection_key))


def _selection_key(gamma):
    # Smaller magnitude first; ties go to the smaller phase magnitude.
    return (abs(gamma), abs(phase(gamma)))


def _select(port, roots):
    passive = list(root for root in roots if abs(root) < 1)
    if not passive:
        raise NegativeDiscriminant(port, 0.0)
    return min(passive, key=_selection_key)


def conjugate_match(net):
    """
    Find the source and load terminations which conjugately match both ports
    of ``net`` at once.

    :raise PotentiallyUnstable: If ``net`` is not unconditionally stable.
    :raise NegativeDiscriminant: If a quadratic has no real-magnitude
        solution.
    :raise InconsistentMatch: If the selected terminations do not reproduce
        each other's conjugates.

    :return MatchDesign: The match.
    """
    report = classify(net)
    if not report.is_unconditional():
        raise PotentiallyUnstable(report.k, report.delta_mag)

    s11, s12, s21, s22 = net.s11, net.s12, net.s21, net.s22
    d = report.delta
    b1 = 1 + abs(s11) ** 2 - abs(s22) ** 2 - abs(d) ** 2
    b2 = 1 + abs(s22) ** 2 - abs(s11) ** 2 - abs(d) ** 2
    c1 = s11 - d * s22.conjugate()
    c2 = s22 - d * s11.conjugate()

    if report.unilateral:
        # The quadratics degenerate to conjugate matching each port alone.
        gamma_s_roots = _unilateral_roots(s11)
        gamma_l_roots = _unilateral_roots(s22)
    else:
        gamma_s_roots = _quadratic_roots(u"source", b1, c1)
        gamma_l_roots = _quadratic_roots(u"load", b2, c2)

    gamma_s = _select(u"source", gamma_s_roots)
    gamma_l = _select(u"load", gamma_l_roots)

    error = max(
        abs(input_reflection(net, gamma_l) - gamma_s.conjugate()),
        abs(output_reflection(net, gamma_s) - gamma_l.conjugate()),
    )
    if error > _tolerance.MATCH_RESIDUAL:
        raise InconsistentMatch(error)

    return MatchDesign(
        gamma_s_roots=gamma_s_roots,
        gamma_l_roots=gamma_l_roots,
        gamma_s=gamma_s,
        gamma_l=gamma_l,
        b1=b1, b2=b2, c1=c1, c2=c2,
        gains=gain_blocks(net, gamma_s, gamma_l),
    )


def _unilateral_roots(s):
    if abs(s) < _tolerance.DENOMINATOR:
        return (0j, _INFINITE_ROOT)
    return (s.conjugate(), 1 / s)


def gain_blocks(net, gamma_s, gamma_l):
    """
    Split the transducer gain of ``net`` between ``gamma_s`` and ``gamma_l``
    into source, device and load blocks.

    The source block uses the input reflection of the loaded device, so the
    decomposition is exact for bilateral devices.

    :raise ReflectionOutOfDisk: If a termination is not passive.

    :return GainBlocks: The blocks.
    """
    for name, gamma in ((u"gamma_s", gamma_s), (u"gamma_l", gamma_l)):
        if not abs(gamma) < 1:
            raise ReflectionOutOfDisk(name, gamma)
    gamma_in = input_reflection(net, gamma_l)
    source_mismatch = abs(1 - gamma_in * gamma_s) ** 2
    if source_mismatch < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"1 - gamma_in * gamma_s", source_mismatch)
    gs = (1 - abs(gamma_s) ** 2) / source_mismatch
    g0 = abs(net.s21) ** 2
    gl = (1 - abs(gamma_l) ** 2) / abs(1 - net.s22 * gamma_l) ** 2
    return GainBlocks(gs=gs, g0=g0, gl=gl, gt=gs * g0 * gl)


def maximum_stable_gain(net):
    """
    ``|s21| / |s12|``, the gain bound of a device on the edge of stability.

    :raise UnilateralDevice: If ``s12`` vanishes.
    """
    if abs(net.s12) < _tolerance.DENOMINATOR:
        raise UnilateralDevice(abs(net.s12 * net.s21))
    return abs(net.s21) / abs(net.s12)


def maximum_available_gain(net):
    """
    The transducer gain at simultaneous conjugate match from the closed form
    in the Rollett factor.

    :raise PotentiallyUnstable: If the Rollett factor is below 1.
    """
    k = k_factor(net)
    if k < 1:
        raise PotentiallyUnstable(k, abs(delta(net)))
    # k - sqrt(k**2 - 1), arranged to survive large k.
    return maximum_stable_gain(net) / (k + sqrt(k ** 2 - 1))


def unilateral_gain(net):
    """
    The maximum transducer gain of ``net`` with ``s12`` neglected.
    """
    return abs(net.s21) ** 2 / (
        (1 - abs(net.s11) ** 2) * (1 - abs(net.s22) ** 2)
    )


def max_transducer_gain(net):
    """
    The maximum transducer gain of an unconditionally stable ``net``.

    It is evaluated from the gain blocks at the conjugate match and checked
    against the Rollett-factor closed form (or the unilateral gain when
    ``s12 * s21`` vanishes).

    :raise PotentiallyUnstable: If ``net`` is not unconditionally stable.
    :raise InconsistentMatch: If the two evaluations differ by more than
        ``GAIN_CROSS_CHECK_DB``.

    :return float: The gain as a linear power ratio.
    """
    match = conjugate_match(net)
    gt = match.gains.gt
    if abs(net.s12 * net.s21) < _tolerance.DENOMINATOR:
        closed_form = unilateral_gain(net)
    else:
        closed_form = maximum_available_gain(net)
    error = abs(db10(gt) - db10(closed_form))
    if error > _tolerance.GAIN_CROSS_CHECK_DB:
        raise InconsistentMatch(error)
    return gt
