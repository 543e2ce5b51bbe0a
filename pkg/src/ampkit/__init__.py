# Copyright ampkit Developers.
# See LICENSE for details.

"""
Small-signal amplifier design: two-port algebra, Touchstone files,
stability, conjugate matching, matching network synthesis, microstrip
lines, bias networks and cascade verification.
"""

__all__ = [
    "version",

    "IMatchingNetwork",

    "DesignError", "DegenerateNetwork", "FrequencyMismatch", "StubSingularity",
    "OpenCircuit", "TouchstoneError", "UndecodableText", "MalformedOptionLine",
    "UnsupportedParamType", "UnsupportedVersion", "NonMonotonicFrequency",
    "WrongColumnCount", "MalformedNumber", "EmptyDocument", "OutOfBand",
    "UnilateralDevice", "CircleDegenerate", "StabilityTestDisagreement",
    "PotentiallyUnstable", "NegativeDiscriminant", "InconsistentMatch",
    "ReflectionOutOfDisk", "TargetBelowFmin", "AlreadyMatched",
    "NoRealizableSection", "NoSolution", "AspectRatioOutOfRange",
    "TargetOutOfRange", "InfeasibleSpec", "NoOperatingPoint",
    "ConfigurationError", "ConditionalStabilityHalt", "VerificationFailed",
    "StageFailed",

    "TwoPortS", "AbcdMatrix", "ElementModel",
    "from_polar", "to_polar", "db10", "db20", "from_db10",
    "series_inductor", "series_capacitor", "series_resistor",
    "shunt_inductor", "shunt_capacitor", "shunt_resistor",
    "transmission_line", "open_stub", "short_stub",
    "element_to_abcd", "element_to_twoport", "s_to_abcd", "abcd_to_s",
    "cascade", "cascade_all", "flip", "gamma_to_z", "z_to_gamma",
    "input_reflection", "output_reflection",

    "TouchstoneDocument", "BiasAnnotation",
    "parse_touchstone", "load_touchstone", "write_touchstone", "sample_at",

    "StabilityCircle", "StabilityReport",
    "delta", "k_factor", "mu_test", "mu_prime_test", "stability_circles",
    "classify",

    "GainBlocks", "MatchDesign",
    "conjugate_match", "gain_blocks", "max_transducer_gain",
    "maximum_available_gain", "maximum_stable_gain", "unilateral_gain",

    "NoiseParams", "NoiseCircle", "noise_figure", "noise_circle",

    "LumpedSolution", "StubSolution",
    "synth_l_section", "synth_lumped", "synth_single_stub", "verify_network",
    "network_abcd",

    "Substrate", "MicrostripLine",
    "analyze", "synthesize", "electrical_to_physical",
    "physical_to_electrical", "realize_stub_network",

    "BiasSpec", "BiasDesignResult",
    "design_bias", "verify_bias", "round_to_series", "nearest_preferred",

    "DesignConfig", "Sweep", "load_config", "parse_config", "parse_frequency",

    "DesignReport", "PortDesign", "SweepRow", "Deviation",
    "run_design", "verify_cascade", "amplifier_at",

    "emit_report", "render_text", "render_sweep_csv", "smith_geometry",
    "render_smith_svg", "report_to_raw", "report_from_raw", "load_report",
]

from incremental import Version

from ._metadata import version_tuple as _version_tuple
version = __version__ = Version("ampkit", *_version_tuple)

from ._interface import IMatchingNetwork
from ._exception import (
    DesignError, DegenerateNetwork, FrequencyMismatch, StubSingularity,
    OpenCircuit, TouchstoneError, UndecodableText, MalformedOptionLine,
    UnsupportedParamType, UnsupportedVersion, NonMonotonicFrequency,
    WrongColumnCount,
    MalformedNumber, EmptyDocument, OutOfBand, UnilateralDevice,
    CircleDegenerate, StabilityTestDisagreement, PotentiallyUnstable,
    NegativeDiscriminant, InconsistentMatch, ReflectionOutOfDisk,
    TargetBelowFmin, AlreadyMatched, NoRealizableSection, NoSolution,
    AspectRatioOutOfRange, TargetOutOfRange, InfeasibleSpec, NoOperatingPoint,
    ConfigurationError, ConditionalStabilityHalt, VerificationFailed,
    StageFailed,
)
from ._twoport import (
    TwoPortS, AbcdMatrix, ElementModel,
    from_polar, to_polar, db10, db20, from_db10,
    series_inductor, series_capacitor, series_resistor,
    shunt_inductor, shunt_capacitor, shunt_resistor,
    transmission_line, open_stub, short_stub,
    element_to_abcd, element_to_twoport, s_to_abcd, abcd_to_s,
    cascade, cascade_all, flip, gamma_to_z, z_to_gamma,
    input_reflection, output_reflection,
)
from ._touchstone import (
    TouchstoneDocument, BiasAnnotation,
    parse_touchstone, load_touchstone, write_touchstone, sample_at,
)
from ._stability import (
    StabilityCircle, StabilityReport,
    delta, k_factor, mu_test, mu_prime_test, stability_circles, classify,
)
from ._match import (
    GainBlocks, MatchDesign,
    conjugate_match, gain_blocks, max_transducer_gain,
    maximum_available_gain, maximum_stable_gain, unilateral_gain,
)
from ._noise import NoiseParams, NoiseCircle, noise_figure, noise_circle
from ._synthesis import (
    LumpedSolution, StubSolution,
    synth_l_section, synth_lumped, synth_single_stub, verify_network,
    network_abcd,
)
from ._microstrip import (
    Substrate, MicrostripLine,
    analyze, synthesize, electrical_to_physical, physical_to_electrical,
    realize_stub_network,
)
from ._bias import (
    BiasSpec, BiasDesignResult,
    design_bias, verify_bias, round_to_series, nearest_preferred,
)
from ._config import (
    DesignConfig, Sweep, load_config, parse_config, parse_frequency,
)
from ._pipeline import (
    DesignReport, PortDesign, SweepRow, Deviation,
    run_design, verify_cascade, amplifier_at,
)
from ._report import (
    emit_report, render_text, render_sweep_csv, smith_geometry,
    render_smith_svg, report_to_raw, report_from_raw, load_report,
)
