# Copyright ampkit Developers.
# See LICENSE for details.

"""
The ``ampkit`` command line.

Exit codes: 0 success, 2 the device is conditionally stable, 3 the input
could not be parsed, 4 the design is infeasible or failed verification,
5 a file could not be read or written.
"""

import sys

from twisted.python import usage
from twisted.python.filepath import FilePath

from pyrsistent import InvariantException

from eliot import FileDestination, add_destinations, remove_destination

from ._metadata import version_tuple
from ._exception import (
    DesignError, ConditionalStabilityHalt, ConfigurationError, PARSE_ERROR,
    IO_ERROR, STABILITY_HALT,
)
from ._twoport import to_polar
from ._touchstone import load_touchstone
from ._stability import classify
from ._match import conjugate_match, max_transducer_gain
from ._synthesis import OPEN, SHORT
from ._microstrip import (
    Substrate, synthesize, electrical_to_physical, physical_to_electrical,
)
from ._bias import BiasSpec, SERIES, EXACT, design_bias, round_to_series
from ._config import DesignConfig, load_config, parse_frequency, BOTH
from ._pipeline import run_design, device_at, INPUT, OUTPUT, design_port
from ._report import (
    HUMAN, MACHINE, ALL_FORMS, emit_report, render_text,
    render_sweep_csv, report_to_raw, stability_to_raw, match_to_raw,
    port_to_raw, line_to_raw, bias_to_raw, sweep_to_raw, dumps_raw,
)

FORMATS = {
    u"human": {HUMAN},
    u"machine": {MACHINE},
    u"both": {HUMAN, MACHINE},
}

STYLES = {
    u"lumped": u"lumped",
    u"stub": u"distributed",
    u"both": BOTH,
}


def _polar_text(value):
    return u"{:.4f} at {:.2f} deg".format(*to_polar(value))


def _emit(format, stdout, human, machine):
    forms = FORMATS[format]
    if HUMAN in forms:
        stdout.write(human)
    if MACHINE in forms:
        stdout.write(dumps_raw(machine))


def _check_format(options):
    if options[u"format"] not in FORMATS:
        raise usage.UsageError(
            u"--format must be one of {}".format(u", ".join(sorted(FORMATS))),
        )



class _DesignOptions(usage.Options):
    """
    Options naming a device and a design frequency, directly or through a
    configuration file.
    """
    optParameters = [
        [u"sparams", None, None, u"Touchstone file of the device."],
        [u"freq", None, None, u"Design frequency, e.g. 3.2GHz."],
        [u"config", None, None, u"TOML design configuration file."],
        [u"z0", None, None, u"System impedance in ohms (default 50).", float],
        [u"out", None, None, u"Directory to write report files into."],
        [u"format", None, u"human", u"Output format: human, machine or both."],
    ]

    command = None
    human_suffix = u".txt"

    def postOptions(self):
        _check_format(self)
        if self[u"config"] is None and (
                self[u"sparams"] is None or self[u"freq"] is None
        ):
            raise usage.UsageError(
                u"give --config or both --sparams and --freq",
            )


    def design_config(self):
        """
        The ``DesignConfig`` these options describe; flags override the
        configuration file.
        """
        overrides = {}
        if self[u"sparams"] is not None:
            overrides[u"sparam_source"] = FilePath(self[u"sparams"])
        if self[u"freq"] is not None:
            overrides[u"f0"] = parse_frequency(self[u"freq"], u"--freq")
        if self[u"z0"] is not None:
            overrides[u"z0"] = self[u"z0"]
        if self[u"config"] is not None:
            return load_config(FilePath(self[u"config"])).set(**overrides)
        if u"name" not in overrides:
            overrides[u"name"] = overrides[u"sparam_source"].splitext()[0].split(u"/")[-1]
        return DesignConfig(**overrides)


    def device(self, cfg):
        doc = load_touchstone(cfg.sparam_source)
        return doc, device_at(doc, cfg.f0, cfg.z0)


    def emit(self, stdout, cfg, human, machine):
        """
        Write ``human`` and ``machine`` to ``stdout`` in the requested format
        and, with ``--out``, to ``<name>.<command><human_suffix>`` and
        ``<name>.<command>.json`` in that directory.
        """
        _emit(self[u"format"], stdout, human, machine)
        if self[u"out"] is None:
            return
        directory = FilePath(self[u"out"])
        if not directory.exists():
            directory.makedirs()
        stem = cfg.name + u"." + self.command
        forms = FORMATS[self[u"format"]]
        if HUMAN in forms:
            directory.child(stem + self.human_suffix).setContent(
                human.encode("utf-8"),
            )
        if MACHINE in forms:
            directory.child(stem + u".json").setContent(
                dumps_raw(machine).encode("utf-8"),
            )



class StabilityOptions(_DesignOptions):
    synopsis = u"[options]"
    command = u"stability"

    def run(self, stdout):
        cfg = self.design_config()
        _, device = self.device(cfg)
        report = classify(device)
        human = [
            u"{}: K = {:.4f}, |delta| = {:.4f}, mu = {:.4f}, mu' = {:.4f}".format(
                report.verdict, report.k, report.delta_mag, report.mu,
                report.mu_prime,
            ),
        ]
        for circle in (report.source_circle, report.load_circle):
            if circle is not None:
                human.append(u"{} circle: center {}, radius {:.4f}, stable {}".format(
                    circle.port, _polar_text(circle.center), circle.radius,
                    circle.stable_region,
                ))
        self.emit(
            stdout, cfg, u"\n".join(human) + u"\n", stability_to_raw(report),
        )
        if not report.is_unconditional():
            return STABILITY_HALT
        return 0



class MatchOptions(_DesignOptions):
    synopsis = u"[options]"
    command = u"match"

    def run(self, stdout):
        cfg = self.design_config()
        _, device = self.device(cfg)
        match = conjugate_match(device)
        gt = max_transducer_gain(device)
        gains = match.gains.in_db()
        human = (
            u"gamma_s = {}\ngamma_l = {}\n"
            u"Gs = {gs:.3f} dB, G0 = {g0:.3f} dB, Gl = {gl:.3f} dB, "
            u"GT = {gt:.3f} dB\n".format(
                _polar_text(match.gamma_s), _polar_text(match.gamma_l), **gains
            )
        )
        machine = match_to_raw(match)
        machine[u"gt_max_linear"] = gt
        self.emit(stdout, cfg, human, machine)
        return 0



class SynthOptions(_DesignOptions):
    synopsis = u"[options]"
    command = u"synth"

    optParameters = [
        [u"style", None, u"both", u"Networks to synthesize: lumped, stub or both."],
        [u"stub", None, OPEN, u"Stub termination: open or short."],
    ]

    def postOptions(self):
        _DesignOptions.postOptions(self)
        if self[u"style"] not in STYLES:
            raise usage.UsageError(u"--style must be lumped, stub or both")
        if self[u"stub"] not in (OPEN, SHORT):
            raise usage.UsageError(u"--stub must be open or short")


    def run(self, stdout):
        cfg = self.design_config().set(
            network_style=STYLES[self[u"style"]], stub_kind=self[u"stub"],
        )
        _, device = self.device(cfg)
        match = conjugate_match(device)
        designs = [
            design_port(INPUT, match.gamma_s, cfg),
            design_port(OUTPUT, match.gamma_l, cfg),
        ]
        human = []
        for design in designs:
            human.append(u"{} (presents {})".format(
                design.port, _polar_text(design.target),
            ))
            for solution in list(design.lumped) + list(design.distributed):
                human.append(u"  " + solution.describe())
        self.emit(
            stdout, cfg, u"\n".join(human) + u"\n",
            {design.port: port_to_raw(design) for design in designs},
        )
        return 0



class MicrostripOptions(usage.Options):
    synopsis = u"[options]"

    optParameters = [
        [u"z0", None, 50.0, u"Characteristic impedance in ohms.", float],
        [u"len-frac", None, None, u"Length in wavelengths.", float],
        [u"freq", None, None, u"Frequency the length holds at."],
        [u"eps-r", None, 3.38, u"Substrate relative permittivity.", float],
        [u"h-mm", None, 0.813, u"Substrate height in mm.", float],
        [u"t-um", None, 17.0, u"Conductor thickness in um.", float],
        [u"format", None, u"human", u"Output format: human, machine or both."],
    ]

    def postOptions(self):
        _check_format(self)
        if self[u"len-frac"] is not None and self[u"freq"] is None:
            raise usage.UsageError(u"--len-frac needs --freq")


    def run(self, stdout):
        substrate = Substrate(
            name=u"custom", eps_r=self[u"eps-r"], h_mm=self[u"h-mm"],
            t_um=self[u"t-um"],
        )
        line = synthesize(self[u"z0"], substrate)
        if self[u"len-frac"] is not None:
            freq = parse_frequency(self[u"freq"], u"--freq")
            length_mm = electrical_to_physical(
                self[u"len-frac"], line.eps_eff, freq,
            )
            line = line.set(
                length_mm=length_mm,
                electrical_length=physical_to_electrical(
                    length_mm, line.eps_eff, freq,
                ),
                freq=freq,
            )
        human = u"width {:.4f} mm, eps_eff {:.4f}, z0 {:.3f} ohm".format(
            line.w_mm, line.eps_eff, line.z0,
        )
        if line.freq is not None:
            human += u", length {:.4f} mm".format(line.length_mm)
        _emit(self[u"format"], stdout, human + u"\n", line_to_raw(line))
        return 0



class BiasOptions(usage.Options):
    synopsis = u"[options]"

    optParameters = [
        [u"config", None, None, u"TOML design configuration with a [bias] section."],
        [u"v-supply", None, None, u"Supply voltage.", float],
        [u"v-x", None, None, u"Divider tap voltage.", float],
        [u"v-ce", None, None, u"Collector-emitter voltage.", float],
        [u"ic-ma", None, None, u"Collector current in mA.", float],
        [u"v-be", None, 0.8, u"Base-emitter voltage.", float],
        [u"beta", None, 200.0, u"DC current gain.", float],
        [u"k", None, 50.0, u"Divider current over base current.", float],
        [u"series", None, None, u"Resistor series: exact, E12 or E24."],
        [u"format", None, u"human", u"Output format: human, machine or both."],
    ]

    def postOptions(self):
        _check_format(self)
        required = (u"v-supply", u"v-x", u"v-ce", u"ic-ma")
        if self[u"config"] is None and any(self[r] is None for r in required):
            raise usage.UsageError(
                u"give --config or all of --v-supply, --v-x, --v-ce, --ic-ma",
            )
        if self[u"series"] is not None and self[u"series"] not in SERIES:
            raise usage.UsageError(u"--series must be exact, E12 or E24")


    def spec_and_series(self):
        if self[u"config"] is not None:
            cfg = load_config(FilePath(self[u"config"]))
            if cfg.bias is None:
                raise ConfigurationError(u"bias", u"missing")
            return cfg.bias, self[u"series"] or cfg.bias_series
        spec = BiasSpec(
            v_supply=self[u"v-supply"], v_x=self[u"v-x"], v_ce=self[u"v-ce"],
            i_c_ma=self[u"ic-ma"], v_be=self[u"v-be"], beta=self[u"beta"],
            k=self[u"k"],
        )
        return spec, self[u"series"] or EXACT


    def run(self, stdout):
        spec, series = self.spec_and_series()
        result = round_to_series(design_bias(spec), series)
        human = u"".join(
            u"{} = {:.2f} ohm\n".format(name.upper(), value)
            for (name, value) in sorted(result.resistors().items())
        ) + u"Ic = {:.3f} mA, Vce = {:.3f} V ({})\n".format(
            result.verified_ic_ma, result.verified_vce, result.series,
        )
        _emit(self[u"format"], stdout, human, bias_to_raw(result))
        return 0



class VerifyOptions(_DesignOptions):
    synopsis = u"[options]"
    command = u"sweep"
    human_suffix = u".csv"

    def run(self, stdout):
        cfg = self.design_config()
        report = run_design(cfg)
        self.emit(
            stdout, cfg, render_sweep_csv(report.verification),
            sweep_to_raw(report.verification),
        )
        return 0



class DesignOptions(_DesignOptions):
    synopsis = u"[options]"

    def write_report(self, report, cfg, stdout):
        if self[u"out"] is not None:
            emit_report(report, FilePath(self[u"out"]), cfg.name, ALL_FORMS)
        _emit(self[u"format"], stdout, render_text(report), report_to_raw(report))


    def run(self, stdout):
        cfg = self.design_config()
        try:
            report = run_design(cfg)
        except ConditionalStabilityHalt as e:
            self.write_report(e.report, cfg, stdout)
            raise
        self.write_report(report, cfg, stdout)
        return 0



class AmpkitOptions(usage.Options):
    synopsis = u"ampkit [--log-file PATH] <command> [options]"

    optParameters = [
        [u"log-file", None, None, u"Append Eliot JSON logs to this file."],
    ]

    subCommands = [
        [u"stability", None, StabilityOptions, u"Classify the device's stability."],
        [u"match", None, MatchOptions, u"Find the simultaneous conjugate match."],
        [u"synth", None, SynthOptions, u"Synthesize matching networks."],
        [u"microstrip", None, MicrostripOptions, u"Size a microstrip line."],
        [u"bias", None, BiasOptions, u"Design the bias network."],
        [u"verify", None, VerifyOptions, u"Run the design and print the sweep."],
        [u"design", None, DesignOptions, u"Run the whole design flow."],
    ]

    def opt_version(self):
        """
        Display ampkit version and exit.
        """
        print(u"ampkit {}.{}.{}".format(*version_tuple))
        sys.exit(0)


    def postOptions(self):
        if self.subCommand is None:
            raise usage.UsageError(u"a command is required")



def run(argv, stdout, stderr):
    """
    Run the command line ``argv``.

    :return int: The exit code.
    """
    options = AmpkitOptions()
    try:
        options.parseOptions(argv)
    except usage.UsageError as e:
        stderr.write(u"{}\nampkit: {}\n".format(options, e))
        return PARSE_ERROR

    destination = None
    if options[u"log-file"] is not None:
        try:
            log_file = open(options[u"log-file"], u"a")
        except OSError as e:
            stderr.write(u"ampkit: {}\n".format(e))
            return IO_ERROR
        destination = FileDestination(file=log_file)
        add_destinations(destination)
    try:
        return options.subOptions.run(stdout)
    except DesignError as e:
        stderr.write(u"ampkit: {}\n".format(e))
        return e.exit_code
    except InvariantException as e:
        stderr.write(u"ampkit: {}\n".format(e))
        return PARSE_ERROR
    except OSError as e:
        stderr.write(u"ampkit: {}\n".format(e))
        return IO_ERROR
    finally:
        if destination is not None:
            remove_destination(destination)
            destination.file.close()


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    sys.exit(run(argv, sys.stdout, sys.stderr))
