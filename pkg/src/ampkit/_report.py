# Copyright ampkit Developers.
# See LICENSE for details.

"""
Report output: a JSON document holding every number of a ``DesignReport``,
a plain text summary, the verification sweep as CSV and a Smith chart.
"""

import csv
import io
from json import dumps, loads
from math import isinf, isfinite

import attr
from attr.validators import instance_of

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle
from matplotlib.backends.backend_svg import FigureCanvasSVG

from ._exception import TargetBelowFmin
from ._twoport import TwoPortS, ElementModel, to_polar, from_db10
from ._stability import StabilityCircle, StabilityReport
from ._match import GainBlocks, MatchDesign
from ._noise import NoiseParams, noise_circle
from ._synthesis import LumpedSolution, StubSolution
from ._microstrip import Substrate, MicrostripLine
from ._bias import BiasSpec, BiasDesignResult
from ._pipeline import DesignReport, PortDesign, SweepRow, Deviation

REPORT_FORMAT = 1

# Noise circles are drawn this far above the minimum noise figure.
NOISE_CIRCLE_STEPS_DB = (0.25, 0.5, 1.0, 2.0)

RESISTANCE_GRID = (0.0, 0.2, 0.5, 1.0, 2.0, 5.0)


def _complex_to_raw(value):
    return {u"re": value.real, u"im": value.imag}


def _complex_from_raw(raw):
    return complex(float(raw[u"re"]), float(raw[u"im"]))


def _optional(to_raw, value):
    if value is None:
        return None
    return to_raw(value)


def _twoport_to_raw(net):
    return {
        u"freq_Hz": net.freq,
        u"z0_ohm": net.z0,
        u"s11": _complex_to_raw(net.s11),
        u"s12": _complex_to_raw(net.s12),
        u"s21": _complex_to_raw(net.s21),
        u"s22": _complex_to_raw(net.s22),
    }


def _twoport_from_raw(raw):
    return TwoPortS(
        freq=raw[u"freq_Hz"],
        z0=raw[u"z0_ohm"],
        **{
            name: _complex_from_raw(raw[name])
            for name in (u"s11", u"s12", u"s21", u"s22")
        }
    )


def _circle_to_raw(circle):
    return {
        u"port": circle.port,
        u"center": _complex_to_raw(circle.center),
        u"radius": circle.radius,
        u"stable_region": circle.stable_region,
    }


def _circle_from_raw(raw):
    return StabilityCircle(
        port=raw[u"port"],
        center=_complex_from_raw(raw[u"center"]),
        radius=raw[u"radius"],
        stable_region=raw[u"stable_region"],
    )


def stability_to_raw(report):
    return {
        u"delta": _complex_to_raw(report.delta),
        u"delta_mag": report.delta_mag,
        u"k": report.k,
        u"mu": report.mu,
        u"mu_prime": report.mu_prime,
        u"verdict": report.verdict,
        u"boundary": report.boundary,
        u"unilateral": report.unilateral,
        u"source_circle": _optional(_circle_to_raw, report.source_circle),
        u"load_circle": _optional(_circle_to_raw, report.load_circle),
    }


def _stability_from_raw(raw):
    return StabilityReport(
        delta=_complex_from_raw(raw[u"delta"]),
        delta_mag=raw[u"delta_mag"],
        k=raw[u"k"],
        mu=raw[u"mu"],
        mu_prime=raw[u"mu_prime"],
        verdict=raw[u"verdict"],
        boundary=raw[u"boundary"],
        unilateral=raw[u"unilateral"],
        source_circle=_optional(_circle_from_raw, raw[u"source_circle"]),
        load_circle=_optional(_circle_from_raw, raw[u"load_circle"]),
    )


def match_to_raw(match):
    return {
        u"gamma_s_roots": list(_complex_to_raw(r) for r in match.gamma_s_roots),
        u"gamma_l_roots": list(_complex_to_raw(r) for r in match.gamma_l_roots),
        u"gamma_s": _complex_to_raw(match.gamma_s),
        u"gamma_l": _complex_to_raw(match.gamma_l),
        u"b1": match.b1,
        u"b2": match.b2,
        u"c1": _complex_to_raw(match.c1),
        u"c2": _complex_to_raw(match.c2),
        u"gains_linear": {
            name: getattr(match.gains, name)
            for name in (u"gs", u"g0", u"gl", u"gt")
        },
    }


def _match_from_raw(raw):
    return MatchDesign(
        gamma_s_roots=tuple(_complex_from_raw(r) for r in raw[u"gamma_s_roots"]),
        gamma_l_roots=tuple(_complex_from_raw(r) for r in raw[u"gamma_l_roots"]),
        gamma_s=_complex_from_raw(raw[u"gamma_s"]),
        gamma_l=_complex_from_raw(raw[u"gamma_l"]),
        b1=raw[u"b1"],
        b2=raw[u"b2"],
        c1=_complex_from_raw(raw[u"c1"]),
        c2=_complex_from_raw(raw[u"c2"]),
        gains=GainBlocks(**raw[u"gains_linear"]),
    )


_VALUE_UNITS = {u"L": u"H", u"C": u"F", u"R": u"ohm"}


def _element_to_raw(element):
    return {
        u"kind": element.kind,
        u"component": element.component,
        u"value": element.value,
        u"value_unit": _VALUE_UNITS.get(element.component),
        u"z0_ohm": element.z0,
        u"electrical_length_wavelengths": element.electrical_length,
        u"reference_frequency_Hz": element.reference_frequency,
    }


def _element_from_raw(raw):
    return ElementModel(
        kind=raw[u"kind"],
        component=raw[u"component"],
        value=raw[u"value"],
        z0=raw[u"z0_ohm"],
        electrical_length=raw[u"electrical_length_wavelengths"],
        reference_frequency=raw[u"reference_frequency_Hz"],
    )


def _solution_to_raw(solution):
    return {
        u"z0_ohm": solution.z0,
        u"target": _complex_to_raw(solution.target),
        u"achieved_gamma": _complex_to_raw(solution.achieved_gamma),
        u"residual": solution.residual,
        u"design_frequency_Hz": solution.design_frequency,
    }


def _solution_from_raw(raw):
    return dict(
        z0=raw[u"z0_ohm"],
        target=_complex_from_raw(raw[u"target"]),
        achieved_gamma=_complex_from_raw(raw[u"achieved_gamma"]),
        residual=raw[u"residual"],
        design_frequency=raw[u"design_frequency_Hz"],
    )


def _lumped_to_raw(solution):
    raw = _solution_to_raw(solution)
    raw.update({
        u"topology": solution.topology,
        u"network": list(_element_to_raw(e) for e in solution.network),
    })
    return raw


def _lumped_from_raw(raw):
    return LumpedSolution(
        topology=raw[u"topology"],
        network=list(_element_from_raw(e) for e in raw[u"network"]),
        **_solution_from_raw(raw)
    )


def _stub_to_raw(solution):
    raw = _solution_to_raw(solution)
    raw.update({
        u"stub_kind": solution.stub_kind,
        u"topology": solution.topology,
        u"stub_len_wavelengths": solution.stub_len,
        u"line_len_wavelengths": solution.line_len,
    })
    return raw


def _stub_from_raw(raw):
    return StubSolution(
        stub_kind=raw[u"stub_kind"],
        topology=raw[u"topology"],
        stub_len=raw[u"stub_len_wavelengths"],
        line_len=raw[u"line_len_wavelengths"],
        **_solution_from_raw(raw)
    )


def _substrate_to_raw(substrate):
    return {
        u"name": substrate.name,
        u"eps_r": substrate.eps_r,
        u"h_mm": substrate.h_mm,
        u"t_um": substrate.t_um,
    }


def line_to_raw(line):
    return {
        u"w_mm": line.w_mm,
        u"length_mm": line.length_mm,
        u"z0_ohm": line.z0,
        u"eps_eff": line.eps_eff,
        u"electrical_length_wavelengths": line.electrical_length,
        u"freq_Hz": line.freq,
        u"substrate": _substrate_to_raw(line.substrate),
    }


def _line_from_raw(raw):
    return MicrostripLine(
        w_mm=raw[u"w_mm"],
        length_mm=raw[u"length_mm"],
        z0=raw[u"z0_ohm"],
        eps_eff=raw[u"eps_eff"],
        electrical_length=raw[u"electrical_length_wavelengths"],
        freq=raw[u"freq_Hz"],
        substrate=Substrate(**raw[u"substrate"]),
    )


def port_to_raw(port):
    return {
        u"port": port.port,
        u"target": _complex_to_raw(port.target),
        u"lumped": list(_lumped_to_raw(s) for s in port.lumped),
        u"distributed": list(_stub_to_raw(s) for s in port.distributed),
        u"line": _optional(line_to_raw, port.line),
        u"stub": _optional(line_to_raw, port.stub),
    }


def _port_from_raw(raw):
    return PortDesign(
        port=raw[u"port"],
        target=_complex_from_raw(raw[u"target"]),
        lumped=list(_lumped_from_raw(s) for s in raw[u"lumped"]),
        distributed=list(_stub_from_raw(s) for s in raw[u"distributed"]),
        line=_optional(_line_from_raw, raw[u"line"]),
        stub=_optional(_line_from_raw, raw[u"stub"]),
    )


_BIAS_SPEC_KEYS = (
    (u"v_supply", u"v_supply_V"),
    (u"v_x", u"v_x_V"),
    (u"v_ce", u"v_ce_V"),
    (u"i_c_ma", u"i_c_mA"),
    (u"v_be", u"v_be_V"),
    (u"beta", u"beta"),
    (u"k", u"k"),
)

_BIAS_RESULT_KEYS = (
    (u"r1", u"r1_ohm"),
    (u"r2", u"r2_ohm"),
    (u"r3", u"r3_ohm"),
    (u"r4", u"r4_ohm"),
    (u"i_b_ma", u"i_b_mA"),
    (u"i_x_ma", u"i_x_mA"),
    (u"verified_v_x", u"verified_v_x_V"),
    (u"verified_ic_ma", u"verified_ic_mA"),
    (u"verified_vce", u"verified_vce_V"),
)


def bias_to_raw(result):
    raw = {key: getattr(result, name) for (name, key) in _BIAS_RESULT_KEYS}
    raw.update({
        u"spec": {key: getattr(result.spec, name) for (name, key) in _BIAS_SPEC_KEYS},
        u"series": result.series,
        u"placements": list(result.placements),
    })
    return raw


def _bias_from_raw(raw):
    return BiasDesignResult(
        spec=BiasSpec(**{
            name: raw[u"spec"][key] for (name, key) in _BIAS_SPEC_KEYS
        }),
        series=raw[u"series"],
        placements=raw[u"placements"],
        **{name: raw[key] for (name, key) in _BIAS_RESULT_KEYS}
    )


def _noise_to_raw(noise):
    return {
        u"f_min": noise.f_min,
        u"gamma_opt": _complex_to_raw(noise.gamma_opt),
        u"rn_ohm": noise.rn,
        u"freq_Hz": noise.freq,
    }


def _noise_from_raw(raw):
    return NoiseParams(
        f_min=raw[u"f_min"],
        gamma_opt=_complex_from_raw(raw[u"gamma_opt"]),
        rn=raw[u"rn_ohm"],
        freq=raw[u"freq_Hz"],
    )


def _row_to_raw(row):
    return {
        u"freq_Hz": row.freq,
        u"s11": _complex_to_raw(row.s11),
        u"s21": _complex_to_raw(row.s21),
        u"s22": _complex_to_raw(row.s22),
        u"k": row.k,
        u"mu": row.mu,
        u"nf_dB": row.nf_db,
    }


def sweep_to_raw(rows):
    return list(_row_to_raw(row) for row in rows)


def _row_from_raw(raw):
    return SweepRow(
        freq=raw[u"freq_Hz"],
        s11=_complex_from_raw(raw[u"s11"]),
        s21=_complex_from_raw(raw[u"s21"]),
        s22=_complex_from_raw(raw[u"s22"]),
        k=raw[u"k"],
        mu=raw[u"mu"],
        nf_db=raw[u"nf_dB"],
    )


def _deviation_to_raw(deviation):
    return {
        u"quantity": deviation.quantity,
        u"published": deviation.published,
        u"computed": deviation.computed,
        u"unit": deviation.unit,
        u"citation": deviation.citation,
        u"note": deviation.note,
    }


def report_to_raw(report):
    """
    Convert a report to JSON-compatible values.  Keys of dimensioned
    quantities carry their unit; complex values are ``{"re", "im"}``
    objects.
    """
    return {
        u"format": REPORT_FORMAT,
        u"source": report.source,
        u"f0_Hz": report.f0,
        u"z0_ohm": report.z0,
        u"network_style": report.network_style,
        u"device": _twoport_to_raw(report.device),
        u"stability": stability_to_raw(report.stability),
        u"msg_dB": report.msg_db,
        u"match": _optional(match_to_raw, report.match),
        u"gt_max_dB": report.gt_max_db,
        u"noise": _optional(_noise_to_raw, report.noise),
        u"nf_dB": report.nf_db,
        u"nf_min_dB": report.nf_min_db,
        u"input": _optional(port_to_raw, report.input),
        u"output": _optional(port_to_raw, report.output),
        u"bias": _optional(bias_to_raw, report.bias),
        u"bias_rounded": _optional(bias_to_raw, report.bias_rounded),
        u"verification": list(_row_to_raw(r) for r in report.verification),
        u"lumped_verification": list(
            _row_to_raw(r) for r in report.lumped_verification
        ),
        u"gain_dB": report.gain_db,
        u"deviations": list(_deviation_to_raw(d) for d in report.deviations),
    }


def report_from_raw(raw):
    """
    The inverse of ``report_to_raw``.

    :raise ValueError: If ``raw`` is of an unknown format.
    """
    if raw.get(u"format") != REPORT_FORMAT:
        raise ValueError(u"unknown report format {!r}".format(raw.get(u"format")))
    return DesignReport(
        source=raw[u"source"],
        f0=raw[u"f0_Hz"],
        z0=raw[u"z0_ohm"],
        network_style=raw[u"network_style"],
        device=_twoport_from_raw(raw[u"device"]),
        stability=_stability_from_raw(raw[u"stability"]),
        msg_db=raw[u"msg_dB"],
        match=_optional(_match_from_raw, raw[u"match"]),
        gt_max_db=raw[u"gt_max_dB"],
        noise=_optional(_noise_from_raw, raw[u"noise"]),
        nf_db=raw[u"nf_dB"],
        nf_min_db=raw[u"nf_min_dB"],
        input=_optional(_port_from_raw, raw[u"input"]),
        output=_optional(_port_from_raw, raw[u"output"]),
        bias=_optional(_bias_from_raw, raw[u"bias"]),
        bias_rounded=_optional(_bias_from_raw, raw[u"bias_rounded"]),
        verification=list(_row_from_raw(r) for r in raw[u"verification"]),
        lumped_verification=list(
            _row_from_raw(r) for r in raw[u"lumped_verification"]
        ),
        gain_db=raw[u"gain_dB"],
        deviations=list(Deviation(**d) for d in raw[u"deviations"]),
    )


def _json_values(value):
    if isinstance(value, float) and not isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {k: _json_values(v) for (k, v) in value.items()}
    if isinstance(value, (list, tuple)):
        return list(_json_values(v) for v in value)
    return value


def dumps_raw(raw):
    """
    Serialize JSON-compatible values as indented JSON with sorted keys.
    Infinite numbers are written as the strings ``"inf"`` and ``"-inf"``,
    which the ``float`` field factories read back.
    """
    return dumps(
        _json_values(raw), sort_keys=True, indent=2, allow_nan=False,
    ) + u"\n"


def dumps_report(report):
    """
    :return unicode: The machine-readable form of ``report``.
    """
    return dumps_raw(report_to_raw(report))


def loads_report(text):
    return report_from_raw(loads(text))


def load_report(path):
    """
    Read a report written by ``emit_report``.

    :param FilePath path: The ``.report`` file.
    """
    return loads_report(path.getContent().decode("utf-8"))


def sweep_header(rows):
    """
    The CSV header for ``rows``; the noise figure column is only present
    when the rows have one.
    """
    header = [
        u"freq_Hz", u"S11_dB", u"S11_deg", u"S21_dB", u"S21_deg",
        u"S22_dB", u"S22_deg", u"K", u"mu",
    ]
    if any(row.nf_db is not None for row in rows):
        header.append(u"NF_dB")
    return header


def render_sweep_csv(rows):
    """
    :return unicode: ``rows`` as comma separated values with a header row.
    """
    header = sweep_header(rows)
    output = io.StringIO()
    writer = csv.writer(output, lineterminator=u"\n")
    writer.writerow(header)
    for row in rows:
        values = [row.freq]
        for name in (u"s11", u"s21", u"s22"):
            values.append(getattr(row, name + u"_db")())
            values.append(to_polar(getattr(row, name))[1])
        values.extend([row.k, row.mu])
        if u"NF_dB" in header:
            values.append(row.nf_db)
        writer.writerow(list(repr(float(v)) for v in values))
    return output.getvalue()



@attr.s(frozen=True)
class SmithCircle(object):
    """
    A circle in the reflection coefficient plane.

    :ivar unicode kind: ``"grid"``, ``"unit"``, ``"stability"`` or
        ``"noise"``.
    """
    kind = attr.ib(validator=instance_of(str))
    label = attr.ib(validator=instance_of(str))
    center = attr.ib(validator=instance_of(complex))
    radius = attr.ib(validator=instance_of(float))



@attr.s(frozen=True)
class SmithPoint(object):
    label = attr.ib(validator=instance_of(str))
    gamma = attr.ib(validator=instance_of(complex))



@attr.s(frozen=True)
class SmithGeometry(object):
    """
    Everything drawn on a Smith chart of a design.
    """
    circles = attr.ib()
    points = attr.ib()

    def of_kind(self, kind):
        return list(c for c in self.circles if c.kind == kind)



def smith_geometry(report):
    """
    The Smith chart primitives of ``report``: a constant resistance grid,
    the unit circle, the stability circles, the noise circles and the
    selected source and load reflections.
    """
    circles = list(
        SmithCircle(
            kind=u"grid", label=u"r = {:g}".format(r),
            center=complex(r / (1 + r), 0), radius=1 / (1 + r),
        )
        for r in RESISTANCE_GRID
    )
    circles.append(SmithCircle(
        kind=u"unit", label=u"|gamma| = 1", center=0j, radius=1.0,
    ))
    for circle in (report.stability.source_circle, report.stability.load_circle):
        if circle is not None:
            circles.append(SmithCircle(
                kind=u"stability",
                label=u"{} stability ({})".format(circle.port, circle.stable_region),
                center=circle.center, radius=circle.radius,
            ))
    if report.noise is not None:
        for step in NOISE_CIRCLE_STEPS_DB:
            f_target = from_db10(report.noise.nf_min_db() + step)
            try:
                circle = noise_circle(f_target, report.noise, report.z0)
            except TargetBelowFmin:
                continue
            circles.append(SmithCircle(
                kind=u"noise",
                label=u"NF = {:.2f} dB".format(report.noise.nf_min_db() + step),
                center=circle.center, radius=circle.radius,
            ))
    points = []
    if report.match is not None:
        points.append(SmithPoint(label=u"gamma_s", gamma=report.match.gamma_s))
        points.append(SmithPoint(label=u"gamma_l", gamma=report.match.gamma_l))
    if report.noise is not None:
        points.append(SmithPoint(label=u"gamma_opt", gamma=report.noise.gamma_opt))
    return SmithGeometry(circles=circles, points=points)


_STYLES = {
    u"grid": dict(ec=u"#cccccc", lw=0.5, ls=u"-"),
    u"unit": dict(ec=u"black", lw=1.0, ls=u"-"),
    u"stability": dict(ec=u"tab:red", lw=1.0, ls=u"--"),
    u"noise": dict(ec=u"tab:blue", lw=0.8, ls=u":"),
}


def render_smith_svg(geometry):
    """
    Draw ``geometry`` as an SVG document.  The output depends only on the
    geometry.

    :return bytes: The SVG.
    """
    figure = Figure(figsize=(6, 6))
    FigureCanvasSVG(figure)
    ax = figure.add_subplot(1, 1, 1)
    ax.set_xlim(-1.15, 1.15)
    ax.set_ylim(-1.15, 1.15)
    ax.set_aspect(u"equal", adjustable=u"box")
    ax.axis(u"off")
    for circle in geometry.circles:
        if isinf(circle.radius):
            continue
        ax.add_patch(Circle(
            (circle.center.real, circle.center.imag), circle.radius,
            fill=False, label=circle.label, **_STYLES[circle.kind]
        ))
    ax.plot([-1, 1], [0, 0], color=u"#cccccc", lw=0.5)
    for point in geometry.points:
        ax.plot([point.gamma.real], [point.gamma.imag], u"o", ms=4)
        ax.annotate(
            point.label, (point.gamma.real, point.gamma.imag),
            textcoords=u"offset points", xytext=(5, 5), fontsize=8,
        )
    output = io.BytesIO()
    with matplotlib.rc_context({u"svg.hashsalt": u"ampkit"}):
        figure.savefig(output, format=u"svg", metadata={u"Date": None})
    return output.getvalue()


def _fmt_polar(value):
    magnitude, angle = to_polar(value)
    return u"{:.4f} at {:.2f} deg".format(magnitude, angle)


def _fmt_optional(value, template):
    if value is None:
        return u"n/a"
    return template.format(value)


def _render_port(lines, design):
    lines.append(u"")
    lines.append(u"{} network (presents {})".format(
        design.port.capitalize(), _fmt_polar(design.target),
    ))
    if not (design.lumped or design.distributed):
        lines.append(u"  none needed; the device port is already matched")
    for solution in design.lumped:
        lines.append(u"  lumped {}  (residual {:.2e})".format(
            solution.describe(), solution.residual,
        ))
    for solution in design.distributed:
        lines.append(u"  {}  (residual {:.2e})".format(
            solution.describe(), solution.residual,
        ))
    if design.line is not None:
        lines.append(
            u"  microstrip on {}: width {:.3f} mm, line {:.3f} mm, "
            u"stub {:.3f} mm (eps_eff {:.4f}; quasi-static, lossless)".format(
                design.line.substrate.name, design.line.w_mm,
                design.line.length_mm, design.stub.length_mm,
                design.line.eps_eff,
            )
        )


def _render_bias(lines, title, bias):
    lines.append(u"")
    lines.append(title)
    for name in (u"r1", u"r2", u"r3", u"r4"):
        lines.append(u"  {} = {:.2f} ohm".format(name.upper(), getattr(bias, name)))
    lines.append(u"  operating point: Ic = {:.3f} mA, Vce = {:.3f} V".format(
        bias.verified_ic_ma, bias.verified_vce,
    ))


def render_text(report):
    """
    A human readable summary of ``report``.

    :return unicode: The text.
    """
    stability = report.stability
    lines = [
        u"ampkit design report",
        u"source: {}".format(report.source),
        u"f0 = {:.6g} Hz, z0 = {:g} ohm".format(report.f0, report.z0),
        u"",
        u"Stability: {}".format(stability.verdict),
        u"  K = {:.4f}, |delta| = {:.4f}, mu = {:.4f}, mu' = {:.4f}".format(
            stability.k, stability.delta_mag, stability.mu, stability.mu_prime,
        ),
    ]
    for circle in (stability.source_circle, stability.load_circle):
        if circle is not None:
            lines.append(u"  {} circle: center {}, radius {:.4f}, stable {}".format(
                circle.port, _fmt_polar(circle.center), circle.radius,
                circle.stable_region,
            ))
    lines.append(u"  maximum stable gain: {}".format(
        _fmt_optional(report.msg_db, u"{:.3f} dB"),
    ))

    if report.match is not None:
        gains = report.match.gains.in_db()
        lines.extend([
            u"",
            u"Conjugate match",
            u"  gamma_s = {}".format(_fmt_polar(report.match.gamma_s)),
            u"  gamma_l = {}".format(_fmt_polar(report.match.gamma_l)),
            u"  Gs = {gs:.3f} dB, G0 = {g0:.3f} dB, Gl = {gl:.3f} dB, "
            u"GT = {gt:.3f} dB".format(**gains),
        ])
        if report.nf_db is not None:
            lines.append(u"  noise figure {:.3f} dB (minimum {:.3f} dB)".format(
                report.nf_db, report.nf_min_db,
            ))

    for design in (report.input, report.output):
        if design is not None:
            _render_port(lines, design)

    if report.bias is not None:
        _render_bias(lines, u"Bias network (exact)", report.bias)
        if report.bias_rounded is not None:
            _render_bias(
                lines,
                u"Bias network ({} values, Ic drift {:+.2%})".format(
                    report.bias_rounded.series,
                    report.bias_rounded.ic_drift(),
                ),
                report.bias_rounded,
            )
        for placement in report.bias.placements:
            lines.append(u"  - {}".format(placement))

    if report.gain_db is not None:
        at_f0 = report.row_at(report.f0)
        lines.extend([
            u"",
            u"Verification (ideal lossless elements)",
            u"  gain at f0: {:.3f} dB, S11 {:.1f} dB, S22 {:.1f} dB".format(
                report.gain_db, at_f0.s11_db(), at_f0.s22_db(),
            ),
            u"  {} sweep points".format(len(report.verification)),
        ])

    if report.deviations:
        lines.append(u"")
        lines.append(u"Deviations from the published reference design")
        for deviation in report.deviations:
            lines.append(u"  {}: published {}, computed {} ({})".format(
                deviation.quantity,
                _fmt_optional(deviation.published, u"{:g} " + deviation.unit),
                _fmt_optional(deviation.computed, u"{:.4g} " + deviation.unit),
                deviation.citation,
            ))
            if deviation.note:
                lines.append(u"    {}".format(deviation.note))
    return u"\n".join(lines) + u"\n"


HUMAN = u"human"
MACHINE = u"machine"
SWEEP = u"sweep"
SMITH = u"smith"

ALL_FORMS = frozenset({HUMAN, MACHINE, SWEEP, SMITH})


def emit_report(report, directory, stem, forms=ALL_FORMS):
    """
    Write the requested forms of ``report`` into ``directory``.

    * ``machine``: ``<stem>.report``
    * ``human``: ``<stem>.txt``
    * ``sweep``: ``<stem>.sweep.csv`` and, with lumped verification too,
      ``<stem>.lumped.sweep.csv``
    * ``smith``: ``<stem>.smith.svg``

    :param FilePath directory: Where to write; created if missing.

    :return list[FilePath]: The files written.
    """
    if not directory.exists():
        directory.makedirs()
    written = []

    def write(name, content):
        target = directory.child(stem + name)
        if isinstance(content, str):
            content = content.encode("utf-8")
        target.setContent(content)
        written.append(target)

    if MACHINE in forms:
        write(u".report", dumps_report(report))
    if HUMAN in forms:
        write(u".txt", render_text(report))
    if SWEEP in forms and report.verification:
        write(u".sweep.csv", render_sweep_csv(report.verification))
        if report.lumped_verification:
            write(
                u".lumped.sweep.csv",
                render_sweep_csv(report.lumped_verification),
            )
    if SMITH in forms:
        write(u".smith.svg", render_smith_svg(smith_geometry(report)))
    return written
