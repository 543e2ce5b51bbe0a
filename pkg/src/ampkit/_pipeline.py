# Copyright ampkit Developers.
# See LICENSE for details.

"""
The amplifier design flow.

``run_design`` takes a ``DesignConfig`` through each stage in turn::

    parse -> stability -> match -> synthesize -> microstrip -> bias -> verify

and collects the result of every stage in a ``DesignReport``.  Each stage
runs in its own Eliot action.  A failure is re-raised as ``StageFailed``
naming the stage; a device which is not unconditionally stable stops the
flow after the stability stage with ``ConditionalStabilityHalt``.

Verification uses the ideal, lossless element models at each sweep
frequency.  The microstrip geometry is reported next to them but does not
take part in the cascade.
"""

from contextlib import contextmanager

from pyrsistent import PClass, field, pvector_field

from eliot import start_action, Message

from ._exception import (
    DesignError, AlreadyMatched, ConditionalStabilityHalt, StageFailed,
    VerificationFailed, UnilateralDevice,
)
from ._interface import IMatchingNetwork
from ._invariants import positive, one_of, provider_of
from ._twoport import (
    TwoPortS, AbcdMatrix, complex_field, real_field, optional_real_field,
    s_to_abcd, abcd_to_s, cascade_all, flip, to_polar, db10, db20,
    SERIES_IMPEDANCE, SHUNT_ADMITTANCE, CAPACITOR, INDUCTOR,
)
from ._touchstone import load_touchstone, sample_at
from ._stability import StabilityReport, classify
from ._match import MatchDesign, conjugate_match, max_transducer_gain, maximum_stable_gain
from ._noise import NoiseParams, noise_figure
from ._synthesis import (
    SHUNT_FIRST, SERIES_FIRST, LumpedSolution, StubSolution, synth_lumped,
    synth_single_stub,
    network_abcd, verify_network,
)
from ._microstrip import MicrostripLine, realize_stub_network
from ._bias import BiasDesignResult, design_bias, round_to_series
from ._config import DISTRIBUTED, LUMPED, BOTH, NETWORK_STYLES
from . import _tolerance

INPUT = u"input"
OUTPUT = u"output"

STAGES = (
    u"parse", u"stability", u"match", u"synthesize", u"microstrip", u"bias",
    u"verify",
)

# The cascade must reproduce the maximum transducer gain this closely and
# reflect no more than this at each port, at the design frequency.
GAIN_TOLERANCE_DB = 0.1
MAXIMUM_PORT_REFLECTION = 0.1

PUBLISHED_REALIZED_GAIN_DB = 16.01
PUBLISHED_NOISE_FIGURE_DB = 1.34
# Center magnitude, center angle in degrees and radius.
PUBLISHED_SOURCE_CIRCLE = (1.13, 68.0, 0.2)
PUBLISHED_LOAD_CIRCLE = (1.36, 47.0, 0.5)
PUBLISHED_INPUT_SHUNT_C = 0.113e-9
PUBLISHED_INPUT_SERIES_L = 7.957e-12
PUBLISHED_OUTPUT_SERIES_L = 84.5e-12
PUBLISHED_OUTPUT_SHUNT_L = 0.621e-9
PUBLISHED_R2_OHM = 686e3


def _polar(value):
    magnitude, angle = to_polar(value)
    return dict(magnitude=magnitude, degrees=angle)


def _maybe_db20(value):
    if value == 0:
        return float(u"-inf")
    return db20(value)



class SweepRow(PClass):
    """
    The matched amplifier at one frequency.

    :ivar float freq: Hz.
    :ivar complex s11: Input reflection of the whole amplifier.
    :ivar complex s21: Its forward transmission.
    :ivar complex s22: Its output reflection.
    :ivar float k: The Rollett factor of the bare device.
    :ivar float mu: The source-side mu of the bare device.
    :ivar nf_db: The noise figure with the source the input network
        presents, or ``None`` without noise parameters.
    """
    freq = real_field(invariant=positive(u"freq"))
    s11 = complex_field()
    s21 = complex_field()
    s22 = complex_field()
    k = real_field()
    mu = real_field()
    nf_db = optional_real_field()

    def s11_db(self):
        return _maybe_db20(self.s11)


    def s21_db(self):
        return _maybe_db20(self.s21)


    def s22_db(self):
        return _maybe_db20(self.s22)



class Deviation(PClass):
    """
    A difference between this design and the published reference design it
    is compared with.

    :ivar unicode quantity: What differs.
    :ivar published: The published value, or ``None``.
    :ivar computed: The value computed here, or ``None``.
    :ivar unicode unit: The unit of both values.
    :ivar unicode citation: Where the published value comes from.
    :ivar unicode note: Why they differ.
    """
    quantity = field(type=str, mandatory=True)
    published = optional_real_field()
    computed = optional_real_field()
    unit = field(type=str, mandatory=True, initial=u"")
    citation = field(
        type=str, mandatory=True,
        invariant=lambda c: (len(c.strip()) > 0, u"deviation needs a citation"),
    )
    note = field(type=str, mandatory=True, initial=u"")



class PortDesign(PClass):
    """
    The matching networks synthesized for one side of the device.

    :ivar unicode port: ``"input"`` or ``"output"``.
    :ivar complex target: The reflection the networks present to the device.
    :ivar lumped: Every lumped L-section, or nothing if lumped networks were
        not asked for.
    :ivar distributed: Every single-stub network, shortest first.
    :ivar line: The microstrip series line of the first stub network.
    :ivar stub: Its microstrip stub.
    """
    port = field(type=str, mandatory=True, invariant=one_of(u"port", {INPUT, OUTPUT}))
    target = complex_field()
    lumped = pvector_field(LumpedSolution)
    distributed = pvector_field(StubSolution)
    line = field(type=(MicrostripLine, type(None)), mandatory=True, initial=None)
    stub = field(type=(MicrostripLine, type(None)), mandatory=True, initial=None)

    def selected(self, style):
        """
        The network verification uses for ``style``, or ``None`` if the
        device side needs no network.
        """
        candidates = self.lumped if style == LUMPED else self.distributed
        if candidates:
            return candidates[0]
        return None



def _gate(report):
    if report.stability.is_unconditional():
        return (True, u"")
    synthesized = (
        report.match, report.input, report.output, report.bias,
        report.gain_db,
    )
    return (
        all(part is None for part in synthesized) and
        not report.verification and not report.lumped_verification,
        u"a conditionally stable device must not have a design",
    )


def _summary_agrees(report):
    if report.gain_db is None:
        return (True, u"")
    for row in report.verification:
        if abs(row.freq - report.f0) <= _tolerance.FREQUENCY_MATCH_HZ:
            return (
                abs(row.s21_db() - report.gain_db) < 1e-9,
                u"summary gain does not match the verification at f0",
            )
    return (False, u"the verification does not include f0")



class DesignReport(PClass):
    """
    Everything the design flow found out.

    A report for a conditionally stable device carries only the device,
    its stability and its maximum stable gain.

    :ivar unicode source: Where the device data came from.
    :ivar float f0: The design frequency, in Hz.
    :ivar float z0: The system impedance, in ohms.
    :ivar TwoPortS device: The device at ``f0``, referenced to ``z0``.
    :ivar float msg_db: The maximum stable gain, ``None`` for a unilateral
        device.
    :ivar unicode network_style: Which networks were synthesized.
    :ivar noise: The noise parameters of the device, if given.
    :ivar nf_db: The noise figure at the gain-matched source, when noise
        parameters were given.
    :ivar nf_min_db: The minimum noise figure of the device.
    :ivar bias_rounded: The bias network after rounding to a preferred value
        series, ``None`` if the values were kept exact.
    :ivar verification: The sweep of the amplifier built with the networks
        of ``network_style`` (the stub networks for ``"both"``).
    :ivar lumped_verification: The sweep with the lumped networks when both
        styles were synthesized.
    :ivar gain_db: The verified amplifier gain at ``f0``.
    """
    source = field(type=str, mandatory=True)
    f0 = real_field(invariant=positive(u"f0"))
    z0 = real_field(initial=50.0, invariant=positive(u"z0"))
    device = field(type=TwoPortS, mandatory=True)
    stability = field(type=StabilityReport, mandatory=True)
    msg_db = optional_real_field()
    network_style = field(
        type=str, mandatory=True, initial=DISTRIBUTED,
        invariant=one_of(u"network_style", NETWORK_STYLES),
    )
    match = field(type=(MatchDesign, type(None)), mandatory=True, initial=None)
    gt_max_db = optional_real_field()
    noise = field(type=(NoiseParams, type(None)), mandatory=True, initial=None)
    nf_db = optional_real_field()
    nf_min_db = optional_real_field()
    input = field(type=(PortDesign, type(None)), mandatory=True, initial=None)
    output = field(type=(PortDesign, type(None)), mandatory=True, initial=None)
    bias = field(type=(BiasDesignResult, type(None)), mandatory=True, initial=None)
    bias_rounded = field(
        type=(BiasDesignResult, type(None)), mandatory=True, initial=None,
    )
    verification = pvector_field(SweepRow)
    lumped_verification = pvector_field(SweepRow)
    gain_db = optional_real_field()
    deviations = pvector_field(Deviation)

    def __invariant__(self):
        for check in (_gate, _summary_agrees):
            ok, message = check(self)
            if not ok:
                return (ok, message)
        return (True, u"")


    def row_at(self, freq, rows=None):
        """
        The verification row at ``freq``, or ``None``.
        """
        if rows is None:
            rows = self.verification
        for row in rows:
            if abs(row.freq - freq) <= _tolerance.FREQUENCY_MATCH_HZ:
                return row
        return None



@contextmanager
def _stage(name, **fields):
    with start_action(action_type=u"ampkit:design:" + name, **fields) as action:
        try:
            yield action
        except (ConditionalStabilityHalt, StageFailed):
            raise
        except DesignError as e:
            raise StageFailed(name, e)


def renormalize(net, z0):
    """
    The same two-port with its S-parameters referenced to ``z0``.
    """
    if net.z0 == z0:
        return net
    return abcd_to_s(s_to_abcd(net), z0)


def device_at(doc, freq, z0):
    """
    The device of ``doc`` at ``freq``, referenced to ``z0``.

    :raise OutOfBand: If ``freq`` is outside of the document's band.
    """
    return renormalize(sample_at(doc, freq), z0)


def _network_abcd(network, freq):
    if network is None:
        return AbcdMatrix.identity(freq)
    ok, message = provider_of(IMatchingNetwork)(network)
    if not ok:
        raise TypeError(message)
    return network_abcd(network, freq)


def amplifier_at(input_network, device, output_network):
    """
    The S-parameters of the amplifier made of ``device`` between its
    matching networks, referenced to the device's ``z0``.

    Both networks have port 1 at the outside and port 2 at the device;
    ``None`` stands for a direct connection.
    """
    freq = device.freq
    chain = cascade_all(
        _network_abcd(input_network, freq),
        s_to_abcd(device),
        flip(_network_abcd(output_network, freq)),
    )
    return abcd_to_s(chain, device.z0)


def verify_cascade(input_network, output_network, doc, frequencies, z0=50.0,
                   noise=None):
    """
    Evaluate the matched amplifier over a sweep.

    The networks keep their element values and physical lengths; only the
    device data is sampled at each frequency.

    :param input_network: The ``IMatchingNetwork`` between the source and
        the device, or ``None``.
    :param output_network: The one between the load and the device, or
        ``None``.
    :param TouchstoneDocument doc: The device.
    :param frequencies: The sweep, in Hz.
    :param noise: ``NoiseParams`` to evaluate the noise figure with, taken
        as constant over the sweep; or ``None``.

    :raise OutOfBand: If the sweep leaves the device data's band.

    :return list[SweepRow]: One row per frequency.
    """
    rows = []
    for freq in frequencies:
        device = device_at(doc, freq, z0)
        amplifier = amplifier_at(input_network, device, output_network)
        stability = classify(device)
        nf_db = None
        if noise is not None:
            if input_network is None:
                gamma_s = 0j
            else:
                gamma_s = verify_network(input_network, z0, freq)
            nf_db = db10(noise_figure(gamma_s, noise, z0))
        rows.append(SweepRow(
            freq=freq,
            s11=amplifier.s11,
            s21=amplifier.s21,
            s22=amplifier.s22,
            k=stability.k,
            mu=stability.mu,
            nf_db=nf_db,
        ))
    return rows


def check_verification(row, gt_max_db):
    """
    Require the amplifier to deliver the maximum transducer gain with both
    ports matched.

    :raise VerificationFailed: If it does not.
    """
    gain_db = row.s21_db()
    if not abs(gain_db - gt_max_db) <= GAIN_TOLERANCE_DB:
        raise VerificationFailed(u"s21_dB", gt_max_db, gain_db)
    for name in (u"s11", u"s22"):
        reflection = abs(getattr(row, name))
        if not reflection < MAXIMUM_PORT_REFLECTION:
            raise VerificationFailed(
                name + u"_dB", db20(MAXIMUM_PORT_REFLECTION),
                _maybe_db20(reflection),
            )


def sweep_frequencies(cfg):
    """
    The verification frequencies of ``cfg``: its sweep with ``f0`` added,
    or ``f0`` alone.
    """
    if cfg.sweep is None:
        return [cfg.f0]
    frequencies = cfg.sweep.frequencies()
    slack = _tolerance.FREQUENCY_MATCH_HZ
    if not any(abs(freq - cfg.f0) <= slack for freq in frequencies):
        frequencies = sorted(frequencies + [cfg.f0])
    return frequencies


def design_port(port, target, cfg):
    try:
        lumped = []
        if cfg.wants_lumped():
            lumped = synth_lumped(target, cfg.z0, cfg.f0)
        distributed = []
        if cfg.wants_distributed():
            distributed = synth_single_stub(
                target, cfg.z0, cfg.f0, cfg.stub_kind,
            )
    except AlreadyMatched:
        lumped = distributed = []
    return PortDesign(
        port=port, target=target, lumped=lumped, distributed=distributed,
    )


def _realize(design, substrate, f0):
    if not design.distributed:
        return design
    line, stub = realize_stub_network(design.distributed[0], substrate, f0)
    return design.set(line=line, stub=stub)


def _circle_deviations(circle, port, published):
    name = port + u" stability circle"
    citation = (
        u"published reference design, " + name + u" printed with the "
        u"stability analysis of the bare device"
    )
    note = (
        u"the circle is computed from the device S-parameters at f0; the "
        u"printed circle cannot be reproduced from them"
    )
    magnitude, angle, radius = published
    computed_magnitude = computed_angle = computed_radius = None
    if circle is not None:
        computed_magnitude, computed_angle = to_polar(circle.center)
        computed_radius = circle.radius
    return [
        Deviation(
            quantity=name + u" center magnitude", published=magnitude,
            computed=computed_magnitude, citation=citation, note=note,
        ),
        Deviation(
            quantity=name + u" center angle", published=angle,
            computed=computed_angle, unit=u"deg", citation=citation,
            note=note,
        ),
        Deviation(
            quantity=name + u" radius", published=radius,
            computed=computed_radius, citation=citation, note=note,
        ),
    ]


def _lumped_value(design, topology, kind, component):
    """
    The value of the first ``kind`` ``component`` element in a ``topology``
    section of ``design``, or ``None``.
    """
    if design is None:
        return None
    for solution in design.lumped:
        if solution.topology != topology:
            continue
        for element in solution.network:
            if element.kind == kind and element.component == component:
                return element.value
    return None


def _lumped_deviations(report):
    citation = (
        u"published reference design, element values of the lumped input "
        u"and output matching networks"
    )
    note = (
        u"the published values do not produce the matched reflections at "
        u"f0; the computed sections are checked by re-analysis instead"
    )
    deviations = []
    for port, design, topology, kind, component, value in [
        (INPUT, report.input, SHUNT_FIRST, SHUNT_ADMITTANCE, CAPACITOR,
         PUBLISHED_INPUT_SHUNT_C),
        (INPUT, report.input, SHUNT_FIRST, SERIES_IMPEDANCE, INDUCTOR,
         PUBLISHED_INPUT_SERIES_L),
        (OUTPUT, report.output, SERIES_FIRST, SERIES_IMPEDANCE, INDUCTOR,
         PUBLISHED_OUTPUT_SERIES_L),
        (OUTPUT, report.output, SERIES_FIRST, SHUNT_ADMITTANCE, INDUCTOR,
         PUBLISHED_OUTPUT_SHUNT_L),
    ]:
        where = u"series" if kind == SERIES_IMPEDANCE else u"shunt"
        deviations.append(Deviation(
            quantity=u"{} {} {}".format(
                port, where,
                u"capacitance" if component == CAPACITOR else u"inductance",
            ),
            published=value,
            computed=_lumped_value(design, topology, kind, component),
            unit=u"F" if component == CAPACITOR else u"H",
            citation=citation,
            note=note,
        ))
    return deviations


def deviations_for(report):
    """
    The standing differences between an idealized design and the published
    reference design.
    """
    deviations = [
        Deviation(
            quantity=u"gain at f0",
            published=PUBLISHED_REALIZED_GAIN_DB,
            computed=report.gain_db,
            unit=u"dB",
            citation=u"published reference design, final simulated gain of "
                     u"the realized amplifier",
            note=u"the verification cascades ideal lossless elements; the "
                 u"published gain includes microstrip, junction, bias and "
                 u"stabilization network losses",
        ),
    ]
    deviations.append(Deviation(
        quantity=u"noise figure at f0",
        published=PUBLISHED_NOISE_FIGURE_DB,
        computed=report.nf_db,
        unit=u"dB",
        citation=u"published reference design, final simulated noise figure",
        note=u"computed from the configured noise parameters at the "
             u"gain-matched source; the published figure comes from vendor "
             u"device models",
    ))
    deviations.extend(_circle_deviations(
        report.stability.source_circle, u"source",
        PUBLISHED_SOURCE_CIRCLE,
    ))
    deviations.extend(_circle_deviations(
        report.stability.load_circle, u"load",
        PUBLISHED_LOAD_CIRCLE,
    ))
    deviations.extend(_lumped_deviations(report))
    deviations.append(Deviation(
        quantity=u"bias resistor R2",
        published=PUBLISHED_R2_OHM,
        computed=None if report.bias is None else report.bias.r2,
        unit=u"ohm",
        citation=u"published reference design, bias resistor values "
                 u"R1 to R4",
        note=u"printed as 686 kohm; the divider current through R1 and R2 "
             u"makes it 686 ohm",
    ))
    if report.input is not None and report.input.line is not None:
        deviations.append(Deviation(
            quantity=u"microstrip geometry",
            citation=u"published reference design, line dimensions from a "
                     u"commercial line calculator",
            note=u"quasi-static, lossless closed forms without dispersion; "
                 u"T-junctions and vias are not modelled",
        ))
    return deviations


def _log_deviation(deviation):
    Message.log(
        message_type=u"ampkit:design:deviation",
        quantity=deviation.quantity,
        published=deviation.published,
        computed=deviation.computed,
        unit=deviation.unit,
        citation=deviation.citation,
    )


def run_design(cfg, document=None):
    """
    Design an amplifier.

    :param DesignConfig cfg: The design inputs.
    :param document: The device's ``TouchstoneDocument``; read from
        ``cfg.sparam_source`` if omitted.

    :raise ConditionalStabilityHalt: If the device is not unconditionally
        stable at ``f0``.
    :raise StageFailed: If any stage fails.

    :return DesignReport: The finished design.
    """
    source = cfg.sparam_source.path
    with start_action(action_type=u"ampkit:design", source=source, f0=cfg.f0):
        with _stage(u"parse") as action:
            if document is None:
                document = load_touchstone(cfg.sparam_source)
            device = device_at(document, cfg.f0, cfg.z0)
            minimum, maximum = document.band()
            action.add_success_fields(
                records=len(document.records), minimum=minimum, maximum=maximum,
            )

        with _stage(u"stability") as action:
            stability = classify(device)
            msg_db = None
            if abs(device.s21) > 0:
                try:
                    msg_db = db10(maximum_stable_gain(device))
                except UnilateralDevice:
                    pass
            action.add_success_fields(
                k=stability.k, mu=stability.mu, verdict=stability.verdict,
            )
            report = DesignReport(
                source=source, f0=cfg.f0, z0=cfg.z0, device=device,
                stability=stability, msg_db=msg_db,
                network_style=cfg.network_style,
            )
            if not stability.is_unconditional():
                raise ConditionalStabilityHalt(report)

        with _stage(u"match") as action:
            match = conjugate_match(device)
            gt_max_db = db10(max_transducer_gain(device))
            nf_db = nf_min_db = None
            if cfg.noise is not None:
                nf_db = db10(noise_figure(match.gamma_s, cfg.noise, cfg.z0))
                nf_min_db = cfg.noise.nf_min_db()
            action.add_success_fields(
                gamma_s=_polar(match.gamma_s),
                gamma_l=_polar(match.gamma_l),
                gt_max_db=gt_max_db,
            )

        with _stage(u"synthesize") as action:
            input_design = design_port(INPUT, match.gamma_s, cfg)
            output_design = design_port(OUTPUT, match.gamma_l, cfg)
            action.add_success_fields(
                input=len(input_design.lumped) + len(input_design.distributed),
                output=len(output_design.lumped) + len(output_design.distributed),
            )

        with _stage(u"microstrip") as action:
            input_design = _realize(input_design, cfg.substrate, cfg.f0)
            output_design = _realize(output_design, cfg.substrate, cfg.f0)
            if input_design.line is not None:
                action.add_success_fields(width_mm=input_design.line.w_mm)

        with _stage(u"bias") as action:
            bias = bias_rounded = None
            if cfg.bias is not None:
                bias = design_bias(cfg.bias)
                if cfg.bias_series != bias.series:
                    bias_rounded = round_to_series(bias, cfg.bias_series)
                action.add_success_fields(resistors=bias.resistors())

        with _stage(u"verify") as action:
            frequencies = sweep_frequencies(cfg)
            primary = LUMPED if cfg.network_style == LUMPED else DISTRIBUTED
            verification = verify_cascade(
                input_design.selected(primary),
                output_design.selected(primary),
                document, frequencies, cfg.z0, cfg.noise,
            )
            lumped_verification = []
            if cfg.network_style == BOTH:
                lumped_verification = verify_cascade(
                    input_design.selected(LUMPED),
                    output_design.selected(LUMPED),
                    document, frequencies, cfg.z0, cfg.noise,
                )
            at_f0 = report.row_at(cfg.f0, verification)
            check_verification(at_f0, gt_max_db)
            if lumped_verification:
                check_verification(
                    report.row_at(cfg.f0, lumped_verification), gt_max_db,
                )
            action.add_success_fields(
                points=len(frequencies), gain_db=at_f0.s21_db(),
            )

        report = report.set(
            match=match,
            gt_max_db=gt_max_db,
            noise=cfg.noise,
            nf_db=nf_db,
            nf_min_db=nf_min_db,
            input=input_design,
            output=output_design,
            bias=bias,
            bias_rounded=bias_rounded,
            verification=verification,
            lumped_verification=lumped_verification,
            gain_db=at_f0.s21_db(),
        )
        deviations = deviations_for(report)
        for deviation in deviations:
            _log_deviation(deviation)
        return report.set(deviations=deviations)
