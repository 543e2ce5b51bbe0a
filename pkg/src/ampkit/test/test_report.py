# Copyright ampkit Developers.
# See LICENSE for details.

"""
Tests for ``ampkit._report``.
"""

from json import loads

from fixtures import TempDir

from testtools.matchers import (
    AllMatch, Contains, Equals, HasLength, LessThan, MatchesStructure, Not,
    StartsWith,
)

from twisted.python.filepath import FilePath

from ..testing import TestCase
from ..testing.reference import BFP640, F0, bfp640_band

from .. import (
    ConditionalStabilityHalt,
    TouchstoneDocument, TwoPortS, DesignConfig, Sweep, BiasSpec, NoiseParams,
    run_design, from_polar,
    report_to_raw, report_from_raw, load_report, emit_report, render_text,
    render_sweep_csv, smith_geometry, render_smith_svg,
)
from .._report import (
    HUMAN, SWEEP, REPORT_FORMAT, RESISTANCE_GRID, NOISE_CIRCLE_STEPS_DB,
    dumps_report, dumps_raw, loads_report, sweep_header,
)
from .._config import BOTH
from .._bias import E24

CONFIG = DesignConfig(
    sparam_source=FilePath(u"/nonexistent/bfp640.s2p"), f0=F0, name=u"bfp640",
)

NOISE = NoiseParams(
    f_min=1.2, gamma_opt=from_polar(0.3, 45.0), rn=10.0, freq=F0,
)

SPEC = BiasSpec(
    v_supply=5.0, v_x=1.5, v_ce=2.0, i_c_ma=20.0, v_be=0.8, beta=200.0, k=50.0,
)


def plain_report():
    return run_design(
        CONFIG, TouchstoneDocument(format=u"RI", records=[BFP640]),
    )


def full_report():
    """
    A report with every optional part filled in.
    """
    cfg = CONFIG.set(
        network_style=BOTH, noise=NOISE, bias=SPEC, bias_series=E24,
        sweep=Sweep(f_start=3.0e9, f_stop=3.4e9, n_points=5),
    )
    return run_design(cfg, bfp640_band())


def halted_report():
    device = TwoPortS(freq=F0, s11=0.5, s12=0.5, s21=2.0, s22=0.5)
    try:
        run_design(CONFIG, TouchstoneDocument(format=u"RI", records=[device]))
    except ConditionalStabilityHalt as e:
        return e.report
    raise AssertionError("the design flow did not halt")



class MachineReadableTests(TestCase):
    """
    Tests for the JSON form of a report.
    """
    def test_round_trip(self):
        report = full_report()
        self.assertThat(report_from_raw(report_to_raw(report)), Equals(report))


    def test_text_round_trip(self):
        report = full_report()
        self.assertThat(loads_report(dumps_report(report)), Equals(report))


    def test_halted_round_trip(self):
        """
        A report of a conditionally stable device has no match and no
        networks, and still survives the trip.
        """
        report = halted_report()
        raw = report_to_raw(report)
        self.expectThat(raw[u"match"], Equals(None))
        self.expectThat(raw[u"verification"], Equals([]))
        self.expectThat(report_from_raw(raw), Equals(report))


    def test_units_in_keys(self):
        raw = loads(dumps_report(plain_report()))
        self.expectThat(raw[u"format"], Equals(REPORT_FORMAT))
        self.expectThat(raw[u"f0_Hz"], Equals(F0))
        self.expectThat(raw[u"device"][u"s21"], Equals({
            u"re": BFP640.s21.real, u"im": BFP640.s21.imag,
        }))
        self.expectThat(
            raw[u"input"][u"distributed"][0],
            Contains(u"stub_len_wavelengths"),
        )


    def test_unknown_format(self):
        raw = report_to_raw(plain_report())
        raw[u"format"] = REPORT_FORMAT + 1
        self.assertRaises(ValueError, report_from_raw, raw)


    def test_sorted_keys(self):
        text = dumps_report(plain_report())
        self.expectThat(text, StartsWith(u'{\n  "bias": null,'))
        self.expectThat(text[-1:], Equals(u"\n"))


    def test_infinite_values(self):
        """
        The infinite Rollett factor of a unilateral device is written as a
        string, keeping the document strict JSON.
        """
        device = TwoPortS(freq=F0, s11=0.6j, s12=0, s21=4, s22=-0.3)
        report = run_design(
            CONFIG, TouchstoneDocument(format=u"RI", records=[device]),
        )
        text = dumps_report(report)
        self.expectThat(text, Not(Contains(u"Infinity")))
        self.expectThat(loads(text)[u"stability"][u"k"], Equals(u"inf"))
        self.expectThat(loads_report(text), Equals(report))


    def test_dumps_raw(self):
        self.assertThat(
            loads(dumps_raw({u"a": [float(u"-inf"), 1.5], u"b": None})),
            Equals({u"a": [u"-inf", 1.5], u"b": None}),
        )



class SweepCsvTests(TestCase):
    """
    Tests for ``render_sweep_csv``.
    """
    def test_without_noise(self):
        report = plain_report()
        lines = render_sweep_csv(report.verification).splitlines()
        self.expectThat(lines, HasLength(2))
        self.expectThat(
            lines[0],
            Equals(u"freq_Hz,S11_dB,S11_deg,S21_dB,S21_deg,S22_dB,S22_deg,K,mu"),
        )
        self.expectThat(lines[1], StartsWith(repr(F0) + u","))
        self.expectThat(lines[1].split(u","), HasLength(9))


    def test_with_noise(self):
        report = full_report()
        lines = render_sweep_csv(report.verification).splitlines()
        self.expectThat(lines, HasLength(6))
        self.expectThat(sweep_header(report.verification)[-1], Equals(u"NF_dB"))
        self.expectThat(
            list(line.split(u",") for line in lines[1:]),
            AllMatch(HasLength(10)),
        )



class SmithGeometryTests(TestCase):
    """
    Tests for ``smith_geometry``.
    """
    def test_plain(self):
        geometry = smith_geometry(plain_report())
        self.expectThat(geometry.of_kind(u"grid"), HasLength(len(RESISTANCE_GRID)))
        self.expectThat(geometry.of_kind(u"unit"), HasLength(1))
        self.expectThat(geometry.of_kind(u"stability"), HasLength(2))
        self.expectThat(geometry.of_kind(u"noise"), HasLength(0))
        self.expectThat(
            list(point.label for point in geometry.points),
            Equals([u"gamma_s", u"gamma_l"]),
        )


    def test_grid_touches_open_circuit(self):
        """
        Every constant resistance circle passes through the open circuit.
        """
        geometry = smith_geometry(plain_report())
        for circle in geometry.of_kind(u"grid"):
            self.expectThat(
                abs(circle.center.real + circle.radius - 1), LessThan(1e-12),
            )


    def test_noise_circles(self):
        """
        Each noise circle surrounds the optimum noise source reflection.
        """
        report = full_report()
        geometry = smith_geometry(report)
        circles = geometry.of_kind(u"noise")
        self.expectThat(circles, HasLength(len(NOISE_CIRCLE_STEPS_DB)))
        for circle in circles:
            self.expectThat(
                abs(circle.center - NOISE.gamma_opt), LessThan(circle.radius),
            )
        self.expectThat(
            geometry.points[-1],
            MatchesStructure(label=Equals(u"gamma_opt")),
        )



class SmithSvgTests(TestCase):
    """
    Tests for ``render_smith_svg``.
    """
    def test_svg(self):
        svg = render_smith_svg(smith_geometry(full_report()))
        self.expectThat(svg, StartsWith(b"<?xml"))
        self.expectThat(svg, Contains(b"<svg"))


    def test_deterministic(self):
        geometry = smith_geometry(full_report())
        self.assertThat(
            render_smith_svg(geometry), Equals(render_smith_svg(geometry)),
        )



class TextTests(TestCase):
    """
    Tests for ``render_text``.
    """
    def test_full(self):
        text = render_text(full_report())
        self.expectThat(text, Contains(u"Stability: Unconditional"))
        self.expectThat(text, Contains(u"Conjugate match"))
        self.expectThat(text, Contains(u"quasi-static, lossless"))
        self.expectThat(text, Contains(u"Verification (ideal lossless elements)"))
        self.expectThat(text, Contains(u"Bias network (E24 values"))
        self.expectThat(text, Contains(u"noise figure"))
        self.expectThat(
            text, Contains(u"Deviations from the published reference design"),
        )


    def test_halted(self):
        text = render_text(halted_report())
        self.expectThat(text, Contains(u"Stability: Conditional"))
        self.expectThat(text, Contains(u"source circle"))
        self.expectThat(text, Not(Contains(u"Conjugate match")))
        self.expectThat(text, Not(Contains(u"Verification")))



class EmitTests(TestCase):
    """
    Tests for ``emit_report``.
    """
    def setUp(self):
        super(EmitTests, self).setUp()
        self.directory = FilePath(self.useFixture(TempDir()).path).child(u"out")


    def test_all_forms(self):
        report = full_report()
        written = emit_report(report, self.directory, u"lna")
        self.expectThat(
            sorted(path.basename() for path in written),
            Equals([
                u"lna.lumped.sweep.csv", u"lna.report", u"lna.smith.svg",
                u"lna.sweep.csv", u"lna.txt",
            ]),
        )
        self.expectThat(
            load_report(self.directory.child(u"lna.report")), Equals(report),
        )
        self.expectThat(
            self.directory.child(u"lna.txt").getContent().decode("utf-8"),
            Equals(render_text(report)),
        )


    def test_some_forms(self):
        written = emit_report(plain_report(), self.directory, u"lna", {HUMAN})
        self.assertThat(
            list(path.basename() for path in written), Equals([u"lna.txt"]),
        )


    def test_no_sweep_without_verification(self):
        written = emit_report(halted_report(), self.directory, u"lna", {SWEEP})
        self.expectThat(written, HasLength(0))
        self.expectThat(self.directory.exists(), Equals(True))
