# Copyright ampkit Developers.
# See LICENSE for details.

"""
Tests for ``ampkit._microstrip``.
"""

from pyrsistent import InvariantException

from testtools.matchers import Equals, GreaterThan, LessThan, MatchesAll

from hypothesis import given
from hypothesis.strategies import floats

from ..testing import TestCase
from ..testing.matchers import CloseTo, raises_exception
from ..testing.reference import F0
from ..testing.strategies import substrates

from .. import (
    AspectRatioOutOfRange, TargetOutOfRange,
    Substrate, MicrostripLine, StubSolution,
    analyze, synthesize, electrical_to_physical, physical_to_electrical,
    realize_stub_network,
)


class SynthesizeTests(TestCase):
    """
    Tests for ``synthesize``.
    """
    def test_fifty_ohms_on_ro4003c(self):
        line = synthesize(50.0, Substrate.ro4003c())
        self.expectThat(line.w_mm, CloseTo(1.85908, 1e-4))
        self.expectThat(line.eps_eff, CloseTo(2.6589, 1e-3))
        self.expectThat(line.z0, CloseTo(50.0, 1e-6))
        self.expectThat(line.length_mm, Equals(0.0))


    def test_thin_conductor(self):
        """
        A conductor of no thickness needs a slightly wider strip.
        """
        line = synthesize(50.0, Substrate.ro4003c().set(t_um=0.0))
        self.assertThat(line.w_mm, CloseTo(1.88292, 1e-4))


    def test_air(self):
        line = synthesize(50.0, Substrate.air(1.0))
        self.expectThat(line.w_mm, CloseTo(4.912, 5e-3))
        self.expectThat(line.eps_eff, CloseTo(1.0, 1e-12))


    @given(substrates(), floats(min_value=30, max_value=70))
    def test_inverts_analysis(self, sub, z0):
        line = synthesize(z0, sub)
        z0_found, eps_eff = analyze(line.w_mm, sub)
        self.expectThat(z0_found, CloseTo(z0, 1e-6))
        self.expectThat(
            eps_eff,
            MatchesAll(GreaterThan(1 - 1e-12), LessThan(sub.eps_r + 1e-12)),
        )


    def test_too_low(self):
        self.assertThat(
            lambda: synthesize(5.0, Substrate()),
            raises_exception(TargetOutOfRange, z0_target=5.0),
        )


    def test_too_high(self):
        self.assertThat(
            lambda: synthesize(250.0, Substrate()),
            raises_exception(TargetOutOfRange, z0_target=250.0),
        )



class AnalyzeTests(TestCase):
    """
    Tests for ``analyze``.
    """
    def test_wider_is_lower(self):
        sub = Substrate()
        impedances = list(
            analyze(u * sub.h_mm, sub)[0] for u in (0.1, 0.5, 1, 2, 5, 10)
        )
        self.assertThat(impedances, Equals(sorted(impedances, reverse=True)))


    def test_wider_is_denser(self):
        """
        More of the field is in the dielectric under a wider strip.
        """
        sub = Substrate()
        self.assertThat(
            analyze(0.2, sub)[1], LessThan(analyze(5.0, sub)[1]),
        )


    def test_narrow(self):
        self.assertThat(
            lambda: analyze(0.001, Substrate()),
            raises_exception(AspectRatioOutOfRange),
        )


    def test_wide(self):
        sub = Substrate()
        self.assertThat(
            lambda: analyze(101 * sub.h_mm, sub),
            raises_exception(AspectRatioOutOfRange),
        )


    def test_frequency_ignored(self):
        sub = Substrate()
        self.assertThat(analyze(1.0, sub, 1e9), Equals(analyze(1.0, sub, 1e10)))



class LengthTests(TestCase):
    """
    Tests for the electrical and physical length conversions.
    """
    def test_quarter_wave(self):
        """
        A quarter wave at 3.2 GHz on RO4003C is about 14.36 mm.
        """
        self.assertThat(
            electrical_to_physical(0.25, 2.6589, F0), CloseTo(14.3635, 1e-3),
        )


    @given(floats(min_value=0, max_value=0.5), floats(min_value=1, max_value=12))
    def test_inverse(self, len_frac, eps_eff):
        self.assertThat(
            physical_to_electrical(
                electrical_to_physical(len_frac, eps_eff, F0), eps_eff, F0,
            ),
            CloseTo(len_frac, 1e-12),
        )



class RealizeTests(TestCase):
    """
    Tests for ``realize_stub_network``.
    """
    def test_source_network(self):
        sol = StubSolution.from_lengths(0.1811, 0.0285, 50.0, F0)
        line, stub = realize_stub_network(sol, Substrate())
        self.expectThat(line.w_mm, Equals(stub.w_mm))
        self.expectThat(line.w_mm, CloseTo(1.85908, 1e-4))
        self.expectThat(line.electrical_length, Equals(0.0285))
        self.expectThat(stub.electrical_length, Equals(0.1811))
        self.expectThat(stub.length_mm, CloseTo(10.405, 0.01))
        self.expectThat(line.freq, Equals(F0))


    def test_other_frequency(self):
        """
        Lengths can be laid out for a frequency other than the design one.
        """
        sol = StubSolution.from_lengths(0.1811, 0.0285, 50.0, F0)
        line, _ = realize_stub_network(sol, Substrate(), F0 / 2)
        self.assertThat(
            line.length_mm,
            CloseTo(2 * realize_stub_network(sol, Substrate())[0].length_mm, 1e-9),
        )



class SubstrateTests(TestCase):
    """
    Tests for ``Substrate`` and ``MicrostripLine``.
    """
    def test_default(self):
        self.assertThat(Substrate(), Equals(Substrate.ro4003c()))


    def test_below_vacuum(self):
        self.assertRaises(InvariantException, lambda: Substrate(eps_r=0.5))


    def test_eps_eff_bound(self):
        self.assertRaises(
            InvariantException,
            lambda: MicrostripLine(
                w_mm=1.0, substrate=Substrate(), z0=50.0, eps_eff=4.0,
            ),
        )
