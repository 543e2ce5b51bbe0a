# Copyright ampkit Developers.
# See LICENSE for details.

"""
Exceptions raised by ampkit.

Every failure carries its details as attributes and an ``exit_code`` which
the command line reports.
"""

PARSE_ERROR = 3
INFEASIBLE = 4
STABILITY_HALT = 2
IO_ERROR = 5


class DesignError(Exception):
    """
    Base class for every error ampkit reports.

    :ivar int exit_code: The process exit code the command line uses when
        this error ends a run.
    """
    exit_code = 1



class DegenerateNetwork(DesignError, ValueError):
    """
    A conversion or reflection formula met a vanishing denominator.

    :ivar unicode quantity: Which denominator vanished.
    :ivar float magnitude: Its magnitude.
    """
    def __init__(self, quantity, magnitude):
        ValueError.__init__(self, quantity, magnitude)
        self.quantity = quantity
        self.magnitude = magnitude



class FrequencyMismatch(DesignError, ValueError):
    """
    Two networks evaluated at different frequencies were combined.
    """
    def __init__(self, left, right):
        ValueError.__init__(self, left, right)
        self.left = left
        self.right = right



class StubSingularity(DesignError, ValueError):
    """
    A stub length puts its tangent or cotangent on a pole.

    :ivar unicode kind: The element kind.
    :ivar float electrical_length: The offending length, in wavelengths.
    """
    exit_code = INFEASIBLE

    def __init__(self, kind, electrical_length):
        ValueError.__init__(self, kind, electrical_length)
        self.kind = kind
        self.electrical_length = electrical_length



class OpenCircuit(DesignError, ValueError):
    """
    A reflection coefficient of 1 has no finite impedance.
    """
    def __init__(self, gamma):
        ValueError.__init__(self, gamma)
        self.gamma = gamma



class TouchstoneError(DesignError, ValueError):
    """
    Base class for Touchstone parse failures.

    :ivar int line_number: The 1-based line the failure was found on, or
        ``None`` when it does not belong to a line.
    """
    exit_code = PARSE_ERROR
    line_number = None



class UndecodableText(TouchstoneError):
    """
    The file is not UTF-8 text.
    """
    def __init__(self, line_number, reason):
        TouchstoneError.__init__(self, line_number, reason)
        self.line_number = line_number
        self.reason = reason



class MalformedOptionLine(TouchstoneError):
    def __init__(self, line_number, line):
        TouchstoneError.__init__(self, line_number, line)
        self.line_number = line_number
        self.line = line



class UnsupportedParamType(TouchstoneError):
    """
    The option line names a parameter type other than S.
    """
    def __init__(self, line_number, param_type):
        TouchstoneError.__init__(self, line_number, param_type)
        self.line_number = line_number
        self.param_type = param_type

    def __str__(self):
        return (
            "line {}: parameter type {!r} is not supported; "
            "only S-parameter files can be read".format(
                self.line_number, self.param_type,
            )
        )



class UnsupportedVersion(TouchstoneError):
    """
    The file uses Touchstone 2 keywords.

    :ivar unicode keyword: The keyword which identified the version.
    """
    def __init__(self, line_number, keyword):
        TouchstoneError.__init__(self, line_number, keyword)
        self.line_number = line_number
        self.keyword = keyword

    def __str__(self):
        return (
            "line {}: {} marks a Touchstone 2 file; "
            "only Touchstone 1 two-port files are supported".format(
                self.line_number, self.keyword,
            )
        )



class NonMonotonicFrequency(TouchstoneError):
    def __init__(self, line_number, freq, previous):
        TouchstoneError.__init__(self, line_number, freq, previous)
        self.line_number = line_number
        self.freq = freq
        self.previous = previous



class WrongColumnCount(TouchstoneError):
    def __init__(self, line_number, count):
        TouchstoneError.__init__(self, line_number, count)
        self.line_number = line_number
        self.count = count



class MalformedNumber(TouchstoneError):
    """
    A data row holds a token which is not a number.
    """
    def __init__(self, line_number, token):
        TouchstoneError.__init__(self, line_number, token)
        self.line_number = line_number
        self.token = token



class EmptyDocument(TouchstoneError):
    """
    A Touchstone document without any records was read or written.
    """



class OutOfBand(DesignError, ValueError):
    """
    A frequency outside of the measured band was requested.
    """
    def __init__(self, freq, minimum, maximum):
        ValueError.__init__(self, freq, minimum, maximum)
        self.freq = freq
        self.minimum = minimum
        self.maximum = maximum

    def __str__(self):
        return "{} Hz is outside of the data band [{}, {}] Hz".format(
            self.freq, self.minimum, self.maximum,
        )



class UnilateralDevice(DesignError, ValueError):
    """
    ``s12 * s21`` vanishes so the Rollett factor is undefined.
    """
    def __init__(self, magnitude):
        ValueError.__init__(self, magnitude)
        self.magnitude = magnitude



class CircleDegenerate(DesignError, ValueError):
    """
    A stability circle has its center at infinity; the boundary is a line.

    :ivar unicode port: ``"source"`` or ``"load"``.
    """
    def __init__(self, port, denominator):
        ValueError.__init__(self, port, denominator)
        self.port = port
        self.denominator = denominator



class StabilityTestDisagreement(DesignError, AssertionError):
    """
    The K-delta test and the mu test classified the same network
    differently away from the boundary.
    """
    def __init__(self, k, delta_mag, mu):
        AssertionError.__init__(self, k, delta_mag, mu)
        self.k = k
        self.delta_mag = delta_mag
        self.mu = mu



class PotentiallyUnstable(DesignError, ValueError):
    """
    A conjugate match was requested for a device which is not
    unconditionally stable.  Consult its stability circles instead.
    """
    exit_code = INFEASIBLE

    def __init__(self, k, delta_mag):
        ValueError.__init__(self, k, delta_mag)
        self.k = k
        self.delta_mag = delta_mag

    def __str__(self):
        return (
            "K = {:.6g}, |delta| = {:.6g}: the device is not unconditionally "
            "stable and has no simultaneous conjugate match; choose source "
            "and load terminations from the stable regions of its stability "
            "circles".format(self.k, self.delta_mag)
        )



class NegativeDiscriminant(DesignError, ValueError):
    exit_code = INFEASIBLE

    def __init__(self, port, discriminant):
        ValueError.__init__(self, port, discriminant)
        self.port = port
        self.discriminant = discriminant



class InconsistentMatch(DesignError, AssertionError):
    """
    The selected source and load reflections are not a simultaneous
    conjugate match.
    """
    def __init__(self, error):
        AssertionError.__init__(self, error)
        self.error = error



class ReflectionOutOfDisk(DesignError, ValueError):
    """
    A termination reflection coefficient does not lie inside the unit disk.
    """
    def __init__(self, name, gamma):
        ValueError.__init__(self, name, gamma)
        self.name = name
        self.gamma = gamma



class TargetBelowFmin(DesignError, ValueError):
    def __init__(self, f_target, f_min):
        ValueError.__init__(self, f_target, f_min)
        self.f_target = f_target
        self.f_min = f_min



class AlreadyMatched(DesignError, ValueError):
    """
    The synthesis target is the reference impedance itself.
    """
    exit_code = INFEASIBLE

    def __init__(self, target):
        ValueError.__init__(self, target)
        self.target = target



class NoRealizableSection(DesignError, ValueError):
    """
    An L-section topology cannot reach the target.

    :ivar unicode topology: The topology which was attempted.
    :ivar float radicand: The negative radicand.
    """
    exit_code = INFEASIBLE

    def __init__(self, topology, radicand):
        ValueError.__init__(self, topology, radicand)
        self.topology = topology
        self.radicand = radicand



class NoSolution(DesignError, ValueError):
    exit_code = INFEASIBLE

    def __init__(self, target, residual):
        ValueError.__init__(self, target, residual)
        self.target = target
        self.residual = residual



class AspectRatioOutOfRange(DesignError, ValueError):
    def __init__(self, ratio):
        ValueError.__init__(self, ratio)
        self.ratio = ratio



class TargetOutOfRange(DesignError, ValueError):
    exit_code = INFEASIBLE

    def __init__(self, z0_target, low, high):
        ValueError.__init__(self, z0_target, low, high)
        self.z0_target = z0_target
        self.low = low
        self.high = high



class InfeasibleSpec(DesignError, ValueError):
    """
    A bias network formula produced a non-positive or non-finite resistance.

    :ivar unicode resistor: The resistor (``"r1"`` .. ``"r4"``).
    :ivar float value: The value computed for it.
    """
    exit_code = INFEASIBLE

    def __init__(self, resistor, value):
        ValueError.__init__(self, resistor, value)
        self.resistor = resistor
        self.value = value



class NoOperatingPoint(DesignError, ValueError):
    """
    The bias network does not hold the transistor in its active region.

    :ivar unicode reason: ``"cutoff"`` or ``"saturation"``.
    """
    exit_code = INFEASIBLE

    def __init__(self, reason, v_x, v_ce):
        ValueError.__init__(self, reason, v_x, v_ce)
        self.reason = reason
        self.v_x = v_x
        self.v_ce = v_ce



class ConfigurationError(DesignError, ValueError):
    """
    A design configuration could not be understood.

    :ivar unicode key: The offending key (``section.key``).
    :ivar unicode problem: What is wrong with it.
    """
    exit_code = PARSE_ERROR

    def __init__(self, key, problem):
        ValueError.__init__(self, key, problem)
        self.key = key
        self.problem = problem

    def __str__(self):
        return "{}: {}".format(self.key, self.problem)



class ConditionalStabilityHalt(DesignError):
    """
    The design flow stopped because the device is only conditionally stable.

    :ivar DesignReport report: The report so far.  It has a stability
        section and nothing else.
    """
    exit_code = STABILITY_HALT

    def __init__(self, report):
        DesignError.__init__(self, report)
        self.report = report

    def __str__(self):
        return (
            "the device is conditionally stable (K = {:.6g}, mu = {:.6g}); "
            "no matching networks were synthesized".format(
                self.report.stability.k, self.report.stability.mu,
            )
        )



class VerificationFailed(DesignError):
    """
    The cascade of the synthesized networks and the device missed its
    design targets at the design frequency.
    """
    exit_code = INFEASIBLE

    def __init__(self, check, expected, actual):
        DesignError.__init__(self, check, expected, actual)
        self.check = check
        self.expected = expected
        self.actual = actual



class StageFailed(DesignError):
    """
    A stage of the design flow failed.

    :ivar unicode stage: The stage name.
    :ivar DesignError error: The underlying failure.
    """
    def __init__(self, stage, error):
        DesignError.__init__(self, stage, error)
        self.stage = stage
        self.error = error

    @property
    def exit_code(self):
        return getattr(self.error, "exit_code", DesignError.exit_code)

    def __str__(self):
        return "{} stage failed: {}".format(self.stage, self.error)
