# Copyright ampkit Developers.
# See LICENSE for details.

"""
Explicit interface definitions for ampkit.
"""

from zope.interface import Attribute, Interface


class IMatchingNetwork(Interface):
    """
    An ``IMatchingNetwork`` provider is a synthesized two-port which presents
    a prescribed reflection coefficient at its device-side port when its
    other port is terminated in the reference impedance.

    Port 1 is the reference-impedance port (the 50 ohm source or load).  Port
    2 faces the transistor.
    """
    target = Attribute(
        "The reflection coefficient the network was synthesized to present "
        "(``complex``)."
    )

    achieved_gamma = Attribute(
        "The reflection coefficient the network actually presents at the "
        "design frequency, found by analysing the synthesized elements "
        "(``complex``)."
    )

    residual = Attribute(
        "``abs(achieved_gamma - target)``."
    )

    design_frequency = Attribute(
        "The frequency, in Hz, at which the network was synthesized."
    )

    def elements():
        """
        The network elements in order from port 1 to port 2.

        :return tuple[ElementModel]: The elements.  Line and stub lengths are
            referenced to ``design_frequency``.
        """

    def describe():
        """
        Describe the network for people.

        :return unicode: A one-line description.
        """
