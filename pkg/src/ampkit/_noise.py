# Copyright ampkit Developers.
# See LICENSE for details.

"""
The two-port noise model: noise figure as a function of source reflection
and constant noise figure circles.
"""

from math import isinf, sqrt

from pyrsistent import PClass

from ._exception import ReflectionOutOfDisk, TargetBelowFmin
from ._invariants import positive, non_negative, inside_unit_disk
from ._twoport import complex_field, real_field, from_db10, db10


def _at_least_one(value):
    return (value >= 1, u"f_min must be at least 1, not {!r}".format(value))


class NoiseParams(PClass):
    """
    Noise parameters of a device.

    :ivar float f_min: The minimum noise factor (linear).
    :ivar complex gamma_opt: The source reflection which achieves ``f_min``.
    :ivar float rn: The equivalent noise resistance, in ohms.
    :ivar float freq: The frequency the parameters were measured at, in Hz.
    """
    f_min = real_field(invariant=_at_least_one)
    gamma_opt = complex_field(invariant=inside_unit_disk(u"gamma_opt"))
    rn = real_field(invariant=non_negative(u"rn"))
    freq = real_field(invariant=positive(u"freq"))

    @classmethod
    def from_db(cls, nf_min_db, gamma_opt, rn, freq):
        return cls(
            f_min=from_db10(nf_min_db), gamma_opt=gamma_opt, rn=rn, freq=freq,
        )


    def nf_min_db(self):
        return db10(self.f_min)



class NoiseCircle(PClass):
    """
    The source reflections giving one noise factor.
    """
    f_target = real_field()
    center = complex_field()
    radius = real_field(invariant=non_negative(u"radius"))



def noise_figure(gamma_s, noise, z0=50.0):
    """
    The noise factor (linear) of the device described by ``noise`` when
    driven from ``gamma_s``.

    :raise ReflectionOutOfDisk: If ``gamma_s`` is not passive.
    """
    if not abs(gamma_s) < 1:
        raise ReflectionOutOfDisk(u"gamma_s", gamma_s)
    return noise.f_min + (4 * noise.rn / z0) * (
        abs(gamma_s - noise.gamma_opt) ** 2
    ) / (
        (1 - abs(gamma_s) ** 2) * abs(1 + noise.gamma_opt) ** 2
    )


def noise_circle(f_target, noise, z0=50.0):
    """
    The circle of source reflections for which the noise factor is
    ``f_target``.

    With no noise resistance, or an infinite target, every passive source
    qualifies and the unit circle is returned.

    :raise TargetBelowFmin: If ``f_target`` is below ``noise.f_min``.
    """
    if f_target < noise.f_min:
        raise TargetBelowFmin(f_target, noise.f_min)
    if noise.rn == 0 or isinf(f_target):
        return NoiseCircle(f_target=f_target, center=0j, radius=1.0)
    n = (
        (f_target - noise.f_min) * abs(1 + noise.gamma_opt) ** 2 * z0 /
        (4 * noise.rn)
    )
    return NoiseCircle(
        f_target=f_target,
        center=noise.gamma_opt / (1 + n),
        radius=sqrt(n ** 2 + n * (1 - abs(noise.gamma_opt) ** 2)) / (1 + n),
    )
