# Copyright ampkit Developers.
# See LICENSE for details.

"""
Small-signal stability of two-ports: the Rollett K factor with the
determinant test, the single-parameter mu tests and the source and load
stability circles.
"""

from math import inf

from pyrsistent import PClass, field

from ._exception import (
    DegenerateNetwork, UnilateralDevice, CircleDegenerate,
    StabilityTestDisagreement,
)
from ._invariants import non_negative, one_of
from ._twoport import complex_field, real_field
from . import _tolerance


UNCONDITIONAL = u"Unconditional"
CONDITIONAL = u"Conditional"

INSIDE = u"InsideCircle"
OUTSIDE = u"OutsideCircle"

SOURCE = u"source"
LOAD = u"load"


class StabilityCircle(PClass):
    """
    The locus of terminations on one port which make the reflection at the
    other port exactly 1 in magnitude.

    :ivar unicode port: ``"source"`` (a circle in the source reflection
        plane) or ``"load"``.
    :ivar unicode stable_region: Whether the stable terminations lie
        ``InsideCircle`` or ``OutsideCircle``.
    """
    port = field(type=str, mandatory=True, invariant=one_of(u"port", {SOURCE, LOAD}))
    center = complex_field()
    radius = real_field(invariant=non_negative(u"radius"))
    stable_region = field(
        type=str, mandatory=True,
        invariant=one_of(u"stable_region", {INSIDE, OUTSIDE}),
    )

    def is_stable(self, gamma):
        """
        Is the termination ``gamma`` in the stable region of this circle?
        """
        inside = abs(gamma - self.center) < self.radius
        return inside == (self.stable_region == INSIDE)


    def clears_unit_disk(self):
        """
        Is every passive termination stable according to this circle?
        """
        distance = abs(self.center)
        if self.stable_region == OUTSIDE:
            return distance - self.radius > 1
        return self.radius - distance > 1



class StabilityReport(PClass):
    """
    Everything known about the stability of a two-port at one frequency.

    :ivar float k: The Rollett factor, ``inf`` for a unilateral device.
    :ivar bool boundary: Some test is within ``STABILITY_BOUNDARY`` of its
        threshold; the verdict is then ``Conditional``.
    :ivar bool unilateral: ``s12 * s21`` vanishes.
    :ivar source_circle: A ``StabilityCircle`` or ``None`` if its center is
        at infinity.
    :ivar load_circle: Likewise.
    """
    delta = complex_field()
    delta_mag = real_field()
    k = real_field()
    mu = real_field()
    mu_prime = real_field()
    verdict = field(
        type=str, mandatory=True,
        invariant=one_of(u"verdict", {UNCONDITIONAL, CONDITIONAL}),
    )
    boundary = field(type=bool, mandatory=True, initial=False)
    unilateral = field(type=bool, mandatory=True, initial=False)
    source_circle = field(
        type=(StabilityCircle, type(None)), mandatory=True, initial=None,
    )
    load_circle = field(
        type=(StabilityCircle, type(None)), mandatory=True, initial=None,
    )

    def is_unconditional(self):
        return self.verdict == UNCONDITIONAL



def delta(net):
    """
    The determinant of the S-matrix.
    """
    return net.s11 * net.s22 - net.s12 * net.s21


def k_factor(net):
    """
    The Rollett stability factor.

    :raise UnilateralDevice: If ``s12 * s21`` vanishes.
    """
    loop = abs(net.s12 * net.s21)
    if loop < _tolerance.DENOMINATOR:
        raise UnilateralDevice(loop)
    return (
        1 - abs(net.s11) ** 2 - abs(net.s22) ** 2 + abs(delta(net)) ** 2
    ) / (2 * loop)


def _mu(facing, other, net):
    denominator = (
        abs(other - delta(net) * facing.conjugate()) +
        abs(net.s12 * net.s21)
    )
    if denominator < _tolerance.DENOMINATOR:
        raise DegenerateNetwork(u"mu denominator", denominator)
    return (1 - abs(facing) ** 2) / denominator


def mu_test(net):
    """
    The source-side mu factor.  It exceeds 1 exactly when the two-port is
    unconditionally stable, and grows with the distance of the load
    stability circle from the unit disk.

    :raise DegenerateNetwork: If the denominator vanishes.
    """
    return _mu(net.s11, net.s22, net)


def mu_prime_test(net):
    """
    The load-side counterpart of ``mu_test``.
    """
    return _mu(net.s22, net.s11, net)


def _circle(port, facing, other, origin_reflection, net):
    d = delta(net)
    denominator = abs(facing) ** 2 - abs(d) ** 2
    if abs(denominator) < _tolerance.DENOMINATOR:
        raise CircleDegenerate(port, denominator)
    center = (facing - d * other.conjugate()).conjugate() / denominator
    radius = abs(net.s12 * net.s21 / denominator)
    # The origin terminates the port with z0; it is stable when the other
    # port's own reflection is passive.
    origin_inside = abs(center) < radius
    origin_stable = abs(origin_reflection) < 1
    return StabilityCircle(
        port=port,
        center=center,
        radius=radius,
        stable_region=INSIDE if origin_inside == origin_stable else OUTSIDE,
    )


def stability_circles(net):
    """
    The source and load stability circles.

    :raise CircleDegenerate: If a circle's center is at infinity, so its
        boundary is a straight line.

    :return tuple[StabilityCircle, StabilityCircle]: ``(source, load)``.
    """
    source = _circle(SOURCE, net.s11, net.s22, net.s22, net)
    load = _circle(LOAD, net.s22, net.s11, net.s11, net)
    return source, load


def _mu_or_limit(test, facing, net):
    try:
        return test(net)
    except DegenerateNetwork:
        # Unilateral with the other port perfectly matched.
        return inf if abs(facing) < 1 else 0.0


def _circle_or_none(port, facing, other, origin_reflection, net):
    try:
        return _circle(port, facing, other, origin_reflection, net)
    except CircleDegenerate:
        return None


def classify(net):
    """
    Decide whether ``net`` is unconditionally stable.

    Both the K/determinant test and the mu test are evaluated and must agree
    unless one of them is within ``STABILITY_BOUNDARY`` of its threshold, in
    which case the verdict is ``Conditional`` and ``boundary`` is set.

    :raise StabilityTestDisagreement: If the two tests disagree away from the
        boundary.

    :return StabilityReport: The classification.
    """
    d = delta(net)
    delta_mag = abs(d)
    try:
        k = k_factor(net)
    except UnilateralDevice:
        k = inf
        unilateral = True
        k_delta_stable = abs(net.s11) < 1 and abs(net.s22) < 1
    else:
        unilateral = False
        k_delta_stable = k > 1 and delta_mag < 1

    mu = _mu_or_limit(mu_test, net.s11, net)
    mu_prime = _mu_or_limit(mu_prime_test, net.s22, net)

    margin = _tolerance.STABILITY_BOUNDARY
    boundary = (
        abs(k - 1) < margin or
        abs(delta_mag - 1) < margin or
        abs(mu - 1) < margin
    )
    if boundary:
        verdict = CONDITIONAL
    else:
        if k_delta_stable != (mu > 1):
            raise StabilityTestDisagreement(k, delta_mag, mu)
        verdict = UNCONDITIONAL if k_delta_stable else CONDITIONAL

    return StabilityReport(
        delta=d,
        delta_mag=delta_mag,
        k=k,
        mu=mu,
        mu_prime=mu_prime,
        verdict=verdict,
        boundary=boundary,
        unilateral=unilateral,
        source_circle=_circle_or_none(SOURCE, net.s11, net.s22, net.s22, net),
        load_circle=_circle_or_none(LOAD, net.s22, net.s11, net.s11, net),
    )
