"""
Exceptions raised by wmcount. All of them derive from WMCError so callers (and the command line entry point) can
catch the package's errors in one place.
"""


class WMCError(Exception):
    """
    Base class of all errors raised by wmcount.
    """


class ContractViolation(WMCError):
    """
    A precondition of an operation does not hold, e.g. an unknown variable, an inapplicable rule site or an invalid
    path decomposition.
    """


class ConfigurationError(WMCError):
    """
    A configuration value is out of range or a configuration file cannot be used.
    """


class SizeError(WMCError):
    """
    An exhaustive procedure was asked to handle more variables (or vertices) than its cap allows.
    """


class InvariantViolation(WMCError):
    """
    A runtime check of a structural property failed. Only raised when paranoid checking is enabled.
    """


class ParseError(WMCError):
    """
    Malformed DIMACS input.

    Parameters
    ----------
    message : string
        Description of the problem.
    line : int
        1-based line number in the input where the problem was detected.
    """

    def __init__(self, message, line):
        super().__init__("line {}: {}".format(line, message))
        self.line = line
