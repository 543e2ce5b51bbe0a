# Copyright ampkit Developers.
# See LICENSE for details.

"""
Tests for ``ampkit._synthesis``.
"""

from zope.interface.verify import verifyObject

from pyrsistent import InvariantException

from testtools.matchers import (
    AllMatch, Equals, HasLength, LessThan, MatchesAll, MatchesStructure,
    GreaterThan,
)

from hypothesis import given, settings
from hypothesis.strategies import sampled_from

from ..testing import TestCase
from ..testing.matchers import CloseTo, raises_exception
from ..testing.reference import F0, PUBLISHED_GAMMA_S, PUBLISHED_GAMMA_L
from ..testing.strategies import reflection_targets, reference_impedances

from .. import (
    AlreadyMatched, NoRealizableSection, ReflectionOutOfDisk,
    IMatchingNetwork, LumpedSolution, StubSolution,
    synth_l_section, synth_lumped, synth_single_stub, verify_network,
    network_abcd, element_to_abcd, open_stub, z_to_gamma,
)
from .._synthesis import SHUNT_FIRST, SERIES_FIRST, OPEN, SHORT
from .._twoport import SERIES_IMPEDANCE, SHUNT_ADMITTANCE


def element_like(kind, component, value, tolerance):
    return MatchesStructure(
        kind=Equals(kind),
        component=Equals(component),
        value=CloseTo(value, tolerance),
    )


def presents_target(tolerance=1e-9):
    """
    Match a solution whose elements, analysed again, present its target.
    """
    return MatchesStructure(residual=LessThan(tolerance))



class LumpedTests(TestCase):
    """
    Tests for ``synth_lumped`` and ``synth_l_section``.
    """
    def test_published_source(self):
        """
        The first shunt-first section for the published source reflection is
        a shunt capacitor at the port and a series inductor toward the
        device.
        """
        solutions = synth_lumped(PUBLISHED_GAMMA_S, 50.0, F0)
        first = solutions[0]
        self.expectThat(first.topology, Equals(SHUNT_FIRST))
        self.expectThat(first.network, HasLength(2))
        self.expectThat(
            first.network[0],
            element_like(SHUNT_ADMITTANCE, u"C", 2.286e-12, 0.001e-12),
        )
        self.expectThat(
            first.network[1],
            element_like(SERIES_IMPEDANCE, u"L", 0.4334e-9, 0.0005e-9),
        )
        self.expectThat(
            verify_network(first, 50.0, F0),
            CloseTo(PUBLISHED_GAMMA_S, 1e-9),
        )


    def test_real_target_below_reference(self):
        """
        12.5 ohms lies inside the unit conductance circle, so only the
        shunt-first sections reach it.
        """
        target = z_to_gamma(12.5, 50.0)
        solutions = synth_lumped(target, 50.0, F0)
        self.expectThat(solutions, HasLength(2))
        self.expectThat(
            solutions,
            AllMatch(MatchesStructure(topology=Equals(SHUNT_FIRST))),
        )
        for solution in solutions:
            shunt, series = solution.network
            self.expectThat(
                abs(element_to_abcd(shunt, F0).c), CloseTo(0.03464, 1e-5),
            )
            self.expectThat(
                abs(element_to_abcd(series, F0).b), CloseTo(21.65, 0.01),
            )
            self.expectThat(
                network_abcd(solution, F0).determinant(), CloseTo(1, 1e-9),
            )
        self.expectThat(solutions, AllMatch(presents_target()))


    def test_real_target_above_reference(self):
        """
        150 ohms lies inside the unit resistance circle, so only the
        series-first sections reach it.
        """
        target = 0.5 + 0j
        solutions = synth_lumped(target, 50.0, F0)
        self.expectThat(solutions, HasLength(2))
        self.expectThat(
            solutions,
            AllMatch(MatchesStructure(topology=Equals(SERIES_FIRST))),
        )
        for solution in solutions:
            series, shunt = solution.network
            self.expectThat(
                abs(element_to_abcd(series, F0).b), CloseTo(70.71, 0.01),
            )
            self.expectThat(
                abs(element_to_abcd(shunt, F0).c), CloseTo(0.009428, 1e-6),
            )
        self.expectThat(solutions, AllMatch(presents_target()))


    def test_unreachable_topology(self):
        self.assertThat(
            lambda: synth_l_section(0.5 + 0j, 50.0, F0, SHUNT_FIRST),
            raises_exception(NoRealizableSection, topology=SHUNT_FIRST),
        )


    def test_unknown_topology(self):
        self.assertRaises(
            ValueError,
            lambda: synth_l_section(0.5 + 0j, 50.0, F0, u"pi"),
        )


    @settings(max_examples=500)
    @given(reflection_targets(), reference_impedances())
    def test_every_solution_presents_target(self, target, z0):
        solutions = synth_lumped(target, z0, F0)
        self.expectThat(len(solutions), MatchesAll(
            GreaterThan(0), LessThan(5),
        ))
        for solution in solutions:
            self.expectThat(solution, presents_target())
            self.expectThat(
                verify_network(solution, z0, F0),
                CloseTo(target, 1e-9),
            )


    def test_logs_solutions(self):
        solutions = synth_lumped(PUBLISHED_GAMMA_S, 50.0, F0)
        self.assertThat(
            self.eliot_logs.messages_of_type(u"ampkit:synthesis:solution"),
            HasLength(len(solutions)),
        )


    def test_provides_interface(self):
        [solution] = synth_lumped(PUBLISHED_GAMMA_S, 50.0, F0)[:1]
        self.assertThat(
            verifyObject(IMatchingNetwork, solution), Equals(True),
        )



class SingleStubTests(TestCase):
    """
    Tests for ``synth_single_stub``.
    """
    def test_published_source(self):
        """
        The shorter open-stub network for the published source reflection.
        """
        [first, second] = synth_single_stub(PUBLISHED_GAMMA_S, 50.0, F0)
        self.expectThat(first.stub_len, CloseTo(0.1811, 5e-4))
        self.expectThat(first.line_len, CloseTo(0.0285, 5e-4))
        self.expectThat(first.stub_kind, Equals(OPEN))
        self.expectThat(
            first.total_length(), LessThan(second.total_length()),
        )


    def test_published_load(self):
        [first, _] = synth_single_stub(PUBLISHED_GAMMA_L, 50.0, F0)
        self.expectThat(first.stub_len, CloseTo(0.1688, 5e-4))
        self.expectThat(first.line_len, CloseTo(0.237, 5e-4))


    def test_stub_reactance(self):
        """
        The source stub looks like about 23.15 ohms of capacitive reactance.
        """
        [first, _] = synth_single_stub(PUBLISHED_GAMMA_S, 50.0, F0)
        m = element_to_abcd(open_stub(50.0, first.stub_len), F0)
        self.assertThat(abs(1 / m.c), CloseTo(23.15, 0.05))


    @settings(max_examples=500)
    @given(
        reflection_targets(),
        reference_impedances(),
        sampled_from([OPEN, SHORT]),
    )
    def test_every_solution_presents_target(self, target, z0, stub_kind):
        solutions = synth_single_stub(target, z0, stub_kind=stub_kind)
        self.expectThat(solutions, HasLength(2))
        self.expectThat(solutions, AllMatch(presents_target()))
        self.expectThat(
            solutions,
            AllMatch(MatchesStructure(
                stub_kind=Equals(stub_kind),
                stub_len=MatchesAll(GreaterThan(0), LessThan(0.5 + 1e-15)),
                line_len=LessThan(0.5),
            )),
        )
        self.expectThat(
            solutions[0].total_length(),
            LessThan(solutions[1].total_length() + 1e-15),
        )


    def test_lengths_do_not_depend_on_frequency(self):
        at_design = synth_single_stub(PUBLISHED_GAMMA_L, 50.0, F0)
        normalized = synth_single_stub(PUBLISHED_GAMMA_L, 50.0)
        self.assertThat(
            list((s.stub_len, s.line_len) for s in at_design),
            Equals(list((s.stub_len, s.line_len) for s in normalized)),
        )


    def test_from_lengths(self):
        """
        An existing stub network can be described and analysed.
        """
        solution = StubSolution.from_lengths(0.1811, 0.0285, 50.0, F0)
        self.expectThat(solution.residual, Equals(0.0))
        self.expectThat(
            solution.achieved_gamma, CloseTo(PUBLISHED_GAMMA_S, 2e-3),
        )


    def test_stub_length_range(self):
        self.assertRaises(
            InvariantException,
            lambda: StubSolution.from_lengths(0.0, 0.1, 50.0, F0),
        )


    def test_describe(self):
        solution = StubSolution.from_lengths(0.1811, 0.0285, 50.0, F0)
        self.assertThat(
            solution.describe(),
            Equals(
                u"open stub 0.1811 wavelengths at the port, "
                u"line 0.0285 wavelengths toward the device"
            ),
        )


    def test_elements(self):
        """
        A stub with no line is a single element.
        """
        solution = StubSolution.from_lengths(0.1, 0.0, 50.0, F0)
        self.assertThat(solution.elements(), HasLength(1))



class TargetTests(TestCase):
    """
    Tests for the targets no network is synthesized for.
    """
    @given(sampled_from([synth_lumped, synth_single_stub]))
    def test_matched(self, synthesize):
        self.assertThat(
            lambda: synthesize(0j, 50.0, F0),
            raises_exception(AlreadyMatched),
        )


    @given(sampled_from([synth_lumped, synth_single_stub]))
    def test_active(self, synthesize):
        self.assertThat(
            lambda: synthesize(1.0 + 0j, 50.0, F0),
            raises_exception(ReflectionOutOfDisk, name=u"target"),
        )


    def test_solution_types(self):
        self.expectThat(
            synth_lumped(0.3j, 50.0, F0)[0], MatchesStructure(z0=Equals(50.0)),
        )
        self.expectThat(
            type(synth_lumped(0.3j, 50.0, F0)[0]), Equals(LumpedSolution),
        )
