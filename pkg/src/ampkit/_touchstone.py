# Copyright ampkit Developers.
# See LICENSE for details.

"""
Reading and writing Touchstone version 1 two-port (``.s2p``) files.

Whatever the file's frequency unit and number format, a parsed
``TouchstoneDocument`` holds frequencies in Hz and S-parameters as complex
numbers.  The unit and format are remembered so the document can be written
back the way it was read.
"""

import re
from cmath import rect, phase
from math import log10, radians

import numpy

from pyrsistent import PClass, field, pvector_field

from eliot import Message

from ._exception import (
    MalformedOptionLine, UnsupportedParamType, UnsupportedVersion,
    NonMonotonicFrequency, WrongColumnCount, MalformedNumber, EmptyDocument,
    OutOfBand, UndecodableText,
)
from ._invariants import positive, non_negative, one_of
from ._twoport import TwoPortS, to_polar, optional_real_field
from . import _tolerance


FREQUENCY_UNITS = {
    u"HZ": (u"Hz", 1.0),
    u"KHZ": (u"kHz", 1e3),
    u"MHZ": (u"MHz", 1e6),
    u"GHZ": (u"GHz", 1e9),
}

_MULTIPLIERS = dict(FREQUENCY_UNITS.values())

PARAMETER_TYPES = frozenset({u"S", u"Y", u"Z", u"H", u"G"})
FORMATS = frozenset({u"MA", u"DB", u"RI"})

_DATA_COLUMNS = 9
_NOISE_COLUMNS = 5

_NUMBER = r"([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)"
_VCE = re.compile(r"\bV_?ce\s*[=:]?\s*" + _NUMBER, re.IGNORECASE)
_IC = re.compile(r"\bI_?c\s*[=:]?\s*" + _NUMBER + r"\s*(mA|A)?\b", re.IGNORECASE)


class BiasAnnotation(PClass):
    """
    The bias point a file's comments say the data was measured at.

    :ivar vce: Collector-emitter voltage in V, or ``None``.
    :ivar ic_ma: Collector current in mA, or ``None``.
    """
    vce = optional_real_field(non_negative(u"vce"))
    ic_ma = optional_real_field(non_negative(u"ic_ma"))

    def is_empty(self):
        return self.vce is None and self.ic_ma is None


    def describe(self):
        parts = []
        if self.vce is not None:
            parts.append(u"Vce = {:g} V".format(self.vce))
        if self.ic_ma is not None:
            parts.append(u"Ic = {:g} mA".format(self.ic_ma))
        return u" ".join(parts)



class TouchstoneDocument(PClass):
    """
    A parsed two-port Touchstone file.

    :ivar unicode freq_unit: The frequency unit of the file.
    :ivar unicode param_type: Always ``"S"``.
    :ivar unicode format: ``"MA"``, ``"DB"`` or ``"RI"``.
    :ivar float z0: The reference impedance, in ohms.
    :ivar records: ``TwoPortS`` records in strictly increasing frequency.
    :ivar BiasAnnotation bias: The bias point found in the comments.
    """
    freq_unit = field(
        type=str, initial=u"GHz", mandatory=True,
        invariant=one_of(u"freq_unit", set(_MULTIPLIERS)),
    )
    param_type = field(
        type=str, initial=u"S", mandatory=True,
        invariant=one_of(u"param_type", {u"S"}),
    )
    format = field(
        type=str, initial=u"MA", mandatory=True,
        invariant=one_of(u"format", FORMATS),
    )
    z0 = field(
        type=float, initial=50.0, mandatory=True, factory=float,
        invariant=positive(u"z0"),
    )
    records = pvector_field(TwoPortS)
    bias = field(
        type=BiasAnnotation, initial=BiasAnnotation(), mandatory=True,
    )

    def __invariant__(self):
        freqs = list(record.freq for record in self.records)
        return (
            all(left < right for (left, right) in zip(freqs, freqs[1:])),
            u"records must be in strictly increasing frequency order",
        )


    def band(self):
        """
        :return tuple[float, float]: The lowest and highest record frequency.
        """
        if not self.records:
            raise EmptyDocument()
        return self.records[0].freq, self.records[-1].freq



def _scan_bias(comment, bias):
    vce = _VCE.search(comment)
    if vce is not None:
        bias = bias.set(vce=float(vce.group(1)))
    ic = _IC.search(comment)
    if ic is not None:
        value = float(ic.group(1))
        if (ic.group(2) or u"mA").lower() == u"a":
            value *= 1000
        bias = bias.set(ic_ma=value)
    return bias


def _parse_option_line(line_number, line):
    """
    Read ``# [unit] [parameter] [format] [R z0]`` into document fields.
    """
    options = dict(freq_unit=u"GHz", param_type=u"S", format=u"MA", z0=50.0)
    tokens = iter(line[1:].split())
    for token in tokens:
        key = token.upper()
        if key in FREQUENCY_UNITS:
            options[u"freq_unit"] = FREQUENCY_UNITS[key][0]
        elif key in PARAMETER_TYPES:
            if key != u"S":
                raise UnsupportedParamType(line_number, key)
            options[u"param_type"] = key
        elif key in FORMATS:
            options[u"format"] = key
        elif key == u"R":
            try:
                options[u"z0"] = float(next(tokens))
            except (StopIteration, ValueError):
                raise MalformedOptionLine(line_number, line)
            if not options[u"z0"] > 0:
                raise MalformedOptionLine(line_number, line)
        else:
            raise MalformedOptionLine(line_number, line)
    return options


def _decode_pair(fmt, first, second):
    if fmt == u"RI":
        return complex(first, second)
    if fmt == u"MA":
        return rect(first, radians(second))
    return rect(10 ** (first / 20), radians(second))


def _encode_pair(fmt, value):
    if fmt == u"RI":
        return value.real, value.imag
    magnitude, angle = to_polar(value)
    if fmt == u"MA":
        return magnitude, angle
    if magnitude == 0:
        return float(u"-inf"), angle
    return 20 * log10(magnitude), angle


def _numbers(line_number, tokens):
    values = []
    for token in tokens:
        try:
            values.append(float(token))
        except ValueError:
            raise MalformedNumber(line_number, token)
    return values


def parse_touchstone(text):
    """
    Parse a Touchstone version 1 two-port file.

    Comment lines may carry the bias point (``Vce = 2 V``, ``Ic = 20 mA``).
    A noise-parameter block following the S-parameter rows is skipped.

    :param text: The file content, as ``unicode`` or a text file object.

    :raise TouchstoneError: If the content is not a Touchstone version 1
        S-parameter two-port file.

    :return TouchstoneDocument: The parsed document.
    """
    if hasattr(text, "read"):
        text = text.read()

    options = None
    bias = BiasAnnotation()
    records = []
    in_noise_block = False

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line, _, comment = raw.partition(u"!")
        if comment:
            bias = _scan_bias(comment, bias)
        line = line.strip()
        if not line:
            continue
        if line.startswith(u"["):
            raise UnsupportedVersion(line_number, line.split()[0])
        if line.startswith(u"#"):
            # Only the first option line counts.
            if options is None:
                options = _parse_option_line(line_number, line)
            continue
        if options is None:
            options = _parse_option_line(line_number, u"#")

        values = _numbers(line_number, line.split())
        freq = values[0] * _MULTIPLIERS[options[u"freq_unit"]]

        if in_noise_block:
            if len(values) != _NOISE_COLUMNS:
                raise WrongColumnCount(line_number, len(values))
            continue
        if records and freq <= records[-1].freq:
            if len(values) == _NOISE_COLUMNS:
                in_noise_block = True
                Message.log(
                    message_type=u"ampkit:touchstone:noise-block-ignored",
                    line_number=line_number,
                )
                continue
            raise NonMonotonicFrequency(line_number, freq, records[-1].freq)
        if len(values) != _DATA_COLUMNS:
            raise WrongColumnCount(line_number, len(values))

        fmt = options[u"format"]
        s11, s21, s12, s22 = (
            _decode_pair(fmt, values[i], values[i + 1])
            for i in (1, 3, 5, 7)
        )
        records.append(TwoPortS(
            freq=freq, s11=s11, s12=s12, s21=s21, s22=s22, z0=options[u"z0"],
        ))

    if not records:
        raise EmptyDocument()
    return TouchstoneDocument(records=records, bias=bias, **options)


def load_touchstone(path):
    """
    Parse the Touchstone file at ``path``.

    :param FilePath path: The file.
    """
    content = path.getContent()
    try:
        text = content.decode("utf-8")
    except UnicodeDecodeError as e:
        raise UndecodableText(content[:e.start].count(b"\n") + 1, e.reason)
    return parse_touchstone(text)


def write_touchstone(doc, format=None):
    """
    Serialize a document as Touchstone version 1 text.

    :param TouchstoneDocument doc: The document.
    :param unicode format: ``"MA"``, ``"DB"`` or ``"RI"``; the document's own
        format by default.
        The option line declares it, so the text parses back to a document
        in this format whatever the format of ``doc``.

    :raise EmptyDocument: If ``doc`` has no records.

    :return unicode: The file content.
    """
    if not doc.records:
        raise EmptyDocument()
    if format is None:
        format = doc.format
    format = format.upper()
    if format not in FORMATS:
        raise ValueError(u"unknown Touchstone format {!r}".format(format))

    multiplier = _MULTIPLIERS[doc.freq_unit]
    lines = [u"! Touchstone v1 two-port S-parameters written by ampkit"]
    if not doc.bias.is_empty():
        lines.append(u"! " + doc.bias.describe())
    lines.append(u"# {} S {} R {!r}".format(doc.freq_unit, format, doc.z0))
    lines.append(u"! freq S11 S21 S12 S22")
    for record in doc.records:
        columns = [record.freq / multiplier]
        for value in (record.s11, record.s21, record.s12, record.s22):
            columns.extend(_encode_pair(format, value))
        lines.append(u" ".join(repr(float(column)) for column in columns))
    return u"\n".join(lines) + u"\n"


def _interpolate(left, right, fraction):
    """
    Interpolate linearly in magnitude and unwrapped phase.
    """
    low, high = numpy.unwrap([phase(left), phase(right)])
    magnitude = abs(left) + fraction * (abs(right) - abs(left))
    return rect(magnitude, low + fraction * (high - low))


def sample_at(doc, freq):
    """
    The S-parameters of ``doc`` at ``freq``.

    A record within ``FREQUENCY_MATCH_HZ`` of ``freq`` is returned unchanged;
    other frequencies are interpolated between their bracketing records.

    :raise OutOfBand: If ``freq`` is outside of the document's band.

    :return TwoPortS: The S-parameters.
    """
    minimum, maximum = doc.band()
    slack = _tolerance.FREQUENCY_MATCH_HZ
    if freq < minimum - slack or freq > maximum + slack:
        raise OutOfBand(freq, minimum, maximum)

    records = doc.records
    for record in records:
        if abs(record.freq - freq) <= slack:
            return record

    upper = next(i for (i, record) in enumerate(records) if record.freq > freq)
    left, right = records[upper - 1], records[upper]
    fraction = (freq - left.freq) / (right.freq - left.freq)
    return TwoPortS(
        freq=freq,
        z0=left.z0,
        **{
            name: _interpolate(
                getattr(left, name), getattr(right, name), fraction,
            )
            for name in (u"s11", u"s12", u"s21", u"s22")
        }
    )
