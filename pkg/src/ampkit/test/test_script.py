# Copyright ampkit Developers.
# See LICENSE for details.

"""
Tests for ``ampkit._script``.
"""

from io import StringIO
from json import loads

from fixtures import TempDir

from testtools.matchers import Contains, Equals, HasLength, Not, StartsWith

from hypothesis import given
from hypothesis.strategies import sampled_from

from twisted.python.filepath import FilePath

from ..testing import TestCase
from ..testing.matchers import CloseTo
from ..testing.reference import BFP640_S2P

from .._script import run

CONDITIONAL_S2P = u"""\
# GHz S RI R 50
3.2 0.5 0 2.0 0 0.5 0 0.5 0
"""

UNILATERAL_S2P = u"""\
# GHz S RI R 50
3.2 0 0.6 4.0 0 0 0 -0.3 0
"""

BIAS_FLAGS = [
    u"--v-supply", u"5", u"--v-x", u"1.5", u"--v-ce", u"2", u"--ic-ma", u"20",
]



class ScriptTestCase(TestCase):
    def setUp(self):
        super(ScriptTestCase, self).setUp()
        self.directory = FilePath(self.useFixture(TempDir()).path)


    def write(self, name, text):
        path = self.directory.child(name)
        path.setContent(text.encode("utf-8"))
        return path.path


    def ampkit(self, *argv):
        """
        Run the command line, keeping what it wrote.

        :return int: The exit code.
        """
        self.stdout = StringIO()
        self.stderr = StringIO()
        return run(list(argv), self.stdout, self.stderr)



class UsageTests(ScriptTestCase):
    """
    Tests for command lines which are rejected before anything runs.
    """
    def test_no_command(self):
        self.expectThat(self.ampkit(), Equals(3))
        self.expectThat(
            self.stderr.getvalue(), Contains(u"ampkit: a command is required"),
        )


    @given(sampled_from([
        [u"stability", u"--sparams", u"x.s2p"],
        [u"match", u"--freq", u"3.2GHz"],
        [u"stability", u"--config", u"x.toml", u"--format", u"xml"],
        [u"synth", u"--config", u"x.toml", u"--style", u"coax"],
        [u"microstrip", u"--len-frac", u"0.25"],
        [u"bias", u"--v-supply", u"5"],
        [u"bias"] + BIAS_FLAGS + [u"--series", u"E96"],
        [u"resonate"],
    ]))
    def test_rejected(self, argv):
        self.assertThat(self.ampkit(*argv), Equals(3))


    def test_bad_frequency(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        self.expectThat(
            self.ampkit(u"stability", u"--sparams", path, u"--freq", u"fast"),
            Equals(3),
        )
        self.expectThat(self.stderr.getvalue(), Contains(u"--freq"))


    def test_bad_configuration(self):
        config = self.write(u"lna.toml", u"[design\n")
        self.assertThat(self.ampkit(u"design", u"--config", config), Equals(3))


    def test_missing_device(self):
        self.assertThat(
            self.ampkit(
                u"design", u"--sparams", self.directory.child(u"x.s2p").path,
                u"--freq", u"3.2GHz",
            ),
            Equals(5),
        )


    def test_unwritable_log(self):
        log = self.directory.child(u"missing").child(u"ampkit.log").path
        self.assertThat(
            self.ampkit(u"--log-file", log, u"bias", *BIAS_FLAGS), Equals(5),
        )


    def test_device_not_utf8(self):
        path = self.directory.child(u"bad.s2p")
        path.setContent(
            b"# GHz S RI R 50\n! \xff\xfe bias\n3.2 0.5 0 2.0 0 0.5 0 0.5 0\n",
        )
        self.expectThat(
            self.ampkit(
                u"stability", u"--sparams", path.path, u"--freq", u"3.2GHz",
            ),
            Equals(3),
        )
        self.expectThat(self.stderr.getvalue(), StartsWith(u"ampkit: "))


    def test_configuration_not_utf8(self):
        config = self.directory.child(u"lna.toml")
        config.setContent(b"# \xff\n[design]\n")
        self.assertThat(
            self.ampkit(u"design", u"--config", config.path), Equals(3),
        )



class StabilityTests(ScriptTestCase):
    """
    Tests for ``ampkit stability``.
    """
    def test_unconditional(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        self.expectThat(
            self.ampkit(u"stability", u"--sparams", path, u"--freq", u"3.2GHz"),
            Equals(0),
        )
        self.expectThat(self.stdout.getvalue(), StartsWith(u"Unconditional: K = "))


    def test_conditional(self):
        path = self.write(u"device.s2p", CONDITIONAL_S2P)
        self.expectThat(
            self.ampkit(
                u"stability", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--format", u"machine",
            ),
            Equals(2),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(raw[u"verdict"], Equals(u"Conditional"))
        self.expectThat(raw[u"k"], CloseTo(0.53125, 1e-12))


    def test_unilateral(self):
        """
        The infinite Rollett factor of a unilateral device is written as a
        string.
        """
        path = self.write(u"device.s2p", UNILATERAL_S2P)
        self.expectThat(
            self.ampkit(
                u"stability", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--format", u"machine",
            ),
            Equals(0),
        )
        self.expectThat(self.stdout.getvalue(), Not(Contains(u"Infinity")))
        self.expectThat(loads(self.stdout.getvalue())[u"k"], Equals(u"inf"))


    def test_out(self):
        """
        With ``--out`` the output is also written to a file named for the
        device and the command.
        """
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        out = self.directory.child(u"out")
        self.expectThat(
            self.ampkit(
                u"stability", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--out", out.path, u"--format", u"both",
            ),
            Equals(0),
        )
        self.expectThat(
            sorted(out.listdir()),
            Equals([u"bfp640.stability.json", u"bfp640.stability.txt"]),
        )
        human = out.child(u"bfp640.stability.txt").getContent().decode("utf-8")
        self.expectThat(self.stdout.getvalue(), StartsWith(human))



class MatchTests(ScriptTestCase):
    """
    Tests for ``ampkit match`` and ``ampkit synth``.
    """
    def test_match(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        self.expectThat(
            self.ampkit(
                u"match", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--format", u"machine",
            ),
            Equals(0),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(raw[u"gt_max_linear"], CloseTo(74.47, 0.5))
        self.expectThat(raw[u"gamma_s_roots"], HasLength(2))


    def test_match_unstable(self):
        path = self.write(u"device.s2p", CONDITIONAL_S2P)
        self.assertThat(
            self.ampkit(u"match", u"--sparams", path, u"--freq", u"3.2GHz"),
            Equals(4),
        )


    def test_synth(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        self.expectThat(
            self.ampkit(
                u"synth", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--style", u"stub", u"--format", u"machine",
            ),
            Equals(0),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(sorted(raw), Equals([u"input", u"output"]))
        self.expectThat(raw[u"input"][u"distributed"], HasLength(2))
        self.expectThat(raw[u"input"][u"lumped"], HasLength(0))



class MicrostripTests(ScriptTestCase):
    """
    Tests for ``ampkit microstrip``.
    """
    def test_width(self):
        self.expectThat(
            self.ampkit(u"microstrip", u"--format", u"machine"), Equals(0),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(raw[u"w_mm"], CloseTo(1.85908, 1e-4))
        self.expectThat(raw[u"freq_Hz"], Equals(None))


    def test_quarter_wave(self):
        self.expectThat(
            self.ampkit(
                u"microstrip", u"--len-frac", u"0.25", u"--freq", u"3.2GHz",
                u"--format", u"both",
            ),
            Equals(0),
        )
        human, machine = self.stdout.getvalue().split(u"\n", 1)
        self.expectThat(human, Contains(u"length 14.36"))
        self.expectThat(loads(machine)[u"length_mm"], CloseTo(14.3635, 1e-2))



class BiasTests(ScriptTestCase):
    """
    Tests for ``ampkit bias``.
    """
    def test_exact(self):
        self.expectThat(
            self.ampkit(u"bias", u"--format", u"machine", *BIAS_FLAGS),
            Equals(0),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(raw[u"r1_ohm"], CloseTo(300.0, 1e-9))
        self.expectThat(raw[u"series"], Equals(u"exact"))


    def test_series(self):
        self.expectThat(
            self.ampkit(u"bias", u"--series", u"E24", *BIAS_FLAGS), Equals(0),
        )
        self.expectThat(self.stdout.getvalue(), Contains(u"R3 = 6800.00 ohm"))


    def test_infeasible(self):
        """
        A divider tap at the base-emitter voltage cannot drive the base.
        """
        argv = list(BIAS_FLAGS)
        argv[3] = u"0.8"
        self.expectThat(self.ampkit(u"bias", *argv), Equals(4))
        self.expectThat(self.stderr.getvalue(), StartsWith(u"ampkit: "))


    def test_config_without_bias(self):
        config = self.write(
            u"lna.toml", u'[design]\nsparams = "x.s2p"\nf0 = "3.2 GHz"\n',
        )
        self.assertThat(self.ampkit(u"bias", u"--config", config), Equals(3))



class DesignTests(ScriptTestCase):
    """
    Tests for ``ampkit design`` and ``ampkit verify``.
    """
    def test_design(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        out = self.directory.child(u"out")
        self.expectThat(
            self.ampkit(
                u"design", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--out", out.path,
            ),
            Equals(0),
        )
        self.expectThat(
            sorted(out.listdir()),
            Equals([
                u"bfp640.report", u"bfp640.smith.svg", u"bfp640.sweep.csv",
                u"bfp640.txt",
            ]),
        )
        self.expectThat(
            self.stdout.getvalue(),
            Equals(out.child(u"bfp640.txt").getContent().decode("utf-8")),
        )


    def test_conditional_design(self):
        """
        A conditionally stable device stops the design but its report is
        still written.
        """
        path = self.write(u"device.s2p", CONDITIONAL_S2P)
        out = self.directory.child(u"out")
        self.expectThat(
            self.ampkit(
                u"design", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--out", out.path,
            ),
            Equals(2),
        )
        self.expectThat(out.child(u"device.report").exists(), Equals(True))
        self.expectThat(
            self.stderr.getvalue(), Contains(u"conditionally stable"),
        )


    def test_configuration_file(self):
        self.write(u"bfp640.s2p", BFP640_S2P)
        config = self.write(
            u"lna.toml",
            u'[design]\nsparams = "bfp640.s2p"\nf0 = "3.2 GHz"\n'
            u'name = "lna"\nnetwork_style = "lumped"\n',
        )
        self.expectThat(
            self.ampkit(u"design", u"--config", config, u"--format", u"machine"),
            Equals(0),
        )
        raw = loads(self.stdout.getvalue())
        self.expectThat(raw[u"network_style"], Equals(u"lumped"))
        self.expectThat(raw[u"input"][u"distributed"], HasLength(0))


    def test_verify(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        self.expectThat(
            self.ampkit(u"verify", u"--sparams", path, u"--freq", u"3.2GHz"),
            Equals(0),
        )
        self.expectThat(
            self.stdout.getvalue().splitlines(),
            HasLength(2),
        )


    def test_verify_out(self):
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        out = self.directory.child(u"out")
        self.expectThat(
            self.ampkit(
                u"verify", u"--sparams", path, u"--freq", u"3.2GHz",
                u"--out", out.path, u"--format", u"machine",
            ),
            Equals(0),
        )
        rows = loads(self.stdout.getvalue())
        self.expectThat(rows, HasLength(1))
        self.expectThat(rows[0][u"freq_Hz"], CloseTo(3.2e9, 1e-3))
        self.expectThat(out.listdir(), Equals([u"bfp640.sweep.json"]))
        self.expectThat(
            out.child(u"bfp640.sweep.json").getContent().decode("utf-8"),
            Equals(self.stdout.getvalue()),
        )


    def test_device_outside_configuration_directory(self):
        self.directory.child(u"data").makedirs()
        self.directory.child(u"data").child(u"dev.s2p").setContent(
            BFP640_S2P.encode("utf-8"),
        )
        self.directory.child(u"cfg").makedirs()
        config = self.directory.child(u"cfg").child(u"lna.toml")
        config.setContent(
            b'[design]\nsparams = "../data/dev.s2p"\nf0 = "3.2 GHz"\n',
        )
        self.assertThat(
            self.ampkit(u"stability", u"--config", config.path), Equals(0),
        )


    def test_log_file(self):
        """
        With a log file every design stage is logged to it as JSON.
        """
        path = self.write(u"bfp640.s2p", BFP640_S2P)
        log = self.directory.child(u"ampkit.log")
        self.expectThat(
            self.ampkit(
                u"--log-file", log.path, u"design", u"--sparams", path,
                u"--freq", u"3.2GHz",
            ),
            Equals(0),
        )
        action_types = set(
            loads(line).get(u"action_type")
            for line in log.getContent().decode("utf-8").splitlines()
        )
        self.expectThat(action_types, Contains(u"ampkit:design:match"))
