# Copyright ampkit Developers.
# See LICENSE for details.

"""
Pyrsistent invariant helpers for ampkit.
"""

from math import isfinite

from twisted.python.reflect import fullyQualifiedName


def provider_of(iface):
    """
    Create an invariant requiring the value provides the zope.interface
    ``iface``.
    """
    def check(value):
        return (
            iface.providedBy(value),
            u"{value!r} does not provide {interface!s}".format(
                value=value,
                interface=fullyQualifiedName(iface),
            ),
        )
    return check


def positive(name):
    """
    Create an invariant requiring a finite value greater than zero.
    """
    def check(value):
        return (
            isfinite(value) and value > 0,
            u"{} must be positive and finite, not {!r}".format(name, value),
        )
    return check


def non_negative(name):
    """
    Create an invariant requiring a value of at least zero.
    """
    def check(value):
        return (
            value >= 0,
            u"{} must not be negative, not {!r}".format(name, value),
        )
    return check


def optional(invariant):
    """
    Relax ``invariant`` so that it also accepts ``None``.
    """
    def check(value):
        if value is None:
            return (True, u"")
        return invariant(value)
    return check


def inside_unit_disk(name):
    """
    Create an invariant requiring a complex value with magnitude below one.
    """
    def check(value):
        return (
            abs(value) < 1,
            u"{} must lie inside the unit disk, |{!r}| = {!r}".format(
                name, value, abs(value),
            ),
        )
    return check


def one_of(name, choices):
    """
    Create an invariant requiring the value is one of ``choices``.
    """
    def check(value):
        return (
            value in choices,
            u"{} must be one of {}, not {!r}".format(
                name, u", ".join(sorted(choices)), value,
            ),
        )
    return check
