# Copyright ampkit Developers.
# See LICENSE for details.

"""
Tests for ``ampkit.testing.matchers``.
"""

from testtools.matchers import Is, Equals, Not, Contains

from .. import TestCase
from ..matchers import CloseTo, PolarCloseTo, raises_exception

from ..._exception import InfeasibleSpec


class CloseToTests(TestCase):
    """
    Tests for ``CloseTo``.
    """
    def test_within(self):
        self.expectThat(CloseTo(1.0, 0.1).match(1.05), Is(None))
        self.expectThat(CloseTo(1j, 0.1).match(0.05 + 1j), Is(None))


    def test_mismatch(self):
        mismatch = CloseTo(1.0, 0.1).match(1.5)
        self.assertThat(
            mismatch.describe(),
            Equals(u"1.5 differs from 1.0 by 0.5 (more than 0.1)"),
        )


    def test_str(self):
        self.assertThat(str(CloseTo(2.0)), Equals(u"CloseTo(2.0, 1e-09)"))



class PolarCloseToTests(TestCase):
    """
    Tests for ``PolarCloseTo``.
    """
    def test_wraps(self):
        """
        Angles either side of 180 degrees are close.
        """
        self.assertThat(
            PolarCloseTo(1.0, 179.9, 0.01, 0.5).match(complex(-1, -0.001)),
            Is(None),
        )


    def test_magnitude(self):
        mismatch = PolarCloseTo(0.5, 0.0).match(0.6 + 0j)
        self.assertThat(mismatch.describe(), Contains(u"magnitude"))


    def test_angle(self):
        mismatch = PolarCloseTo(1.0, 90.0).match(1 + 0j)
        self.expectThat(mismatch.describe(), Contains(u"angle"))
        self.expectThat(mismatch.describe(), Not(Contains(u"magnitude")))



class RaisesExceptionTests(TestCase):
    """
    Tests for ``raises_exception``.
    """
    def raiser(self):
        raise InfeasibleSpec(u"r3", 0.0)


    def test_matches(self):
        self.assertThat(
            self.raiser, raises_exception(InfeasibleSpec, resistor=u"r3"),
        )


    def test_attribute_mismatch(self):
        mismatch = raises_exception(InfeasibleSpec, resistor=u"r2").match(
            self.raiser,
        )
        self.assertThat(mismatch, Not(Is(None)))
