"""
Exceptions raised by the hdx package.
"""


class HDXException(Exception):
    def __init__(self, what, msg):
        """
        This exception wraps an error message and lets the caller get the
        value that triggered it (a facet, a degree, a matrix...)
        """
        Exception.__init__(self, msg)
        self.what = what


class InvalidFacet(HDXException):
    pass


class DegreeOutOfRange(HDXException):
    pass


class DimensionMismatch(HDXException):
    pass


class NotSymmetric(HDXException):
    pass


class NegativeSpectrum(HDXException):
    pass


class ZeroVector(HDXException):
    pass


class UnknownGenerator(HDXException):
    pass


class InvalidPermutation(HDXException):
    pass


class InvalidGammaData(HDXException):
    pass


class NotSimplicial(HDXException):
    pass


class SpectralMismatch(HDXException):
    pass


class EmptyFamily(HDXException):
    pass


class InvalidParameter(HDXException):
    pass


class ReportFormatError(HDXException):
    pass


class NotACochainComplex(HDXException):
    pass
