"""Global settings, error classes and logging set-up for ``rcprod``.

Classes
-------
    RCProdError        : base class of every error raised by the package.
    ValidationError    : malformed field/ideal specifications or invalid arguments.
    FactoringCapError  : an ideal norm exceeded ``FACTOR_CAP``.
    UndecidedError     : principality could not be decided within the search bounds.
    UnsaturatedError   : generator primes did not reach the exact ray class order.
    InfiniteGroupError : a relation lattice was not of full rank.
    TableCapError      : phi(q) exceeded ``DLOG_TABLE_CAP``.
    TheoremViolation   : a theorem-backed inequality failed; always an implementation bug.

Functions
---------
-   _loadLogger        - Initialize a ``logging.Logger`` object for output messages.
-   get_threads        - Number of worker processes from ``RCPROD_THREADS``.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import os
import logging

import zcode.inout as zio

# Hard Settings
# =============

FACTOR_CAP = 10**12             # Largest ideal norm passed to ``sympy.factorint``
DLOG_TABLE_CAP = 10**6          # Largest phi(q) for exhaustive discrete-log tables
EULER_TRUNCATION = 10**6        # Prime cutoff P for the c1/c2 Euler products
EXACT_RECIPROCAL_LIMIT = 10**3  # Sum of 1/p kept in exact rationals up to here
PRINCIPAL_SEARCH_BOUND = 2000   # Coefficient box for the fallback generator search
FLOAT_DIGITS = 12               # Significant digits of floats in reports

_LOG_DIR = "./logs/"

THREADS_ENV = "RCPROD_THREADS"

# Soft (Default) Settings (Can be changed from command line)
# ==========================================================

GEN_NORM_BOUND = 50             # Norm bound for ray class generator primes
KERNEL_SCAN_LIMIT = 10**6       # Norm cutoff when scanning for kernel primes
SEED = 42
THREADS = 1
VERBOSE = False

# Standard test matrix
TEST_FIELDS = (-1, -2, -3, -5, -7, -11, 2, 3, 5)
TEST_MODULI = tuple(range(1, 51))
VERIFY_ALL_FIELDS = (-1, -3, -5, 2, 3)
VERIFY_ALL_MODULI = (1, 2, 3, 4, 5, 6, 7)
VERIFY_ALL_XMAX = 2000


# Errors
# ======

class RCProdError(RuntimeError):
    """Base class of all errors raised inside ``rcprod``."""


class ValidationError(RCProdError, ValueError):
    pass


class FactoringCapError(RCProdError):
    pass


class UndecidedError(RCProdError):
    pass


class UnsaturatedError(RCProdError):
    """Raised when the generator primes span a proper subgroup of the ray class group.

    Attributes ``achieved`` and ``expected`` hold the two orders, so the caller can retry
    with a larger generator bound.
    """

    def __init__(self, msg, achieved=None, expected=None):
        super(UnsaturatedError, self).__init__(msg)
        self.achieved = achieved
        self.expected = expected


class InfiniteGroupError(RCProdError):
    pass


class TableCapError(RCProdError):
    """A residue group is too large for an exhaustive discrete-log table."""


class TheoremViolation(RCProdError):
    pass


def get_threads(default=THREADS):
    """Number of worker processes, from the ``RCPROD_THREADS`` environment variable."""
    val = os.environ.get(THREADS_ENV)
    if val is None or not val.strip():
        return default
    try:
        num = int(val)
    except ValueError:
        err_str = "``{}`` must be an integer, got '{}'".format(THREADS_ENV, val)
        raise ValidationError(err_str)
    if num < 1:
        err_str = "``{}`` must be positive, got {}".format(THREADS_ENV, num)
        raise ValidationError(err_str)
    return num


def _GET_LOG_NAMES(name, version=None):
    """Construct the logger name and its log-file name from a base (file)name."""
    logName = os.path.splitext(os.path.basename(name))[0]
    if version is not None:
        logName += "_v{}".format(version)
    logFilename = os.path.join(_LOG_DIR, logName + ".log")
    return logName, logFilename


def _loadLogger(name, verbose=True, debug=False, version=None, tofile=False):
    """Initialize a ``logging.Logger`` object for output messages.

    Arguments
    ---------
    name : str
        Base (file)name from which to construct the log's name, and log filename.
    verbose : bool
        Print 'verbose' (``logging.INFO``) output to the console.
        Overridden if ``debug == True``.
    debug : bool
        Print extremely verbose (``logging.DEBUG``) output to the console.
        Overrides `verbose` setting.
    version : str or `None`
        Current version of the package.  Added to the log filename if provided.
    tofile : bool
        Whether output should also be logged to a file (always at ``logging.DEBUG``).

    Returns
    -------
    logger : ``logging.Logger`` object
        Object for output logging.

    """
    logName, logFilename = _GET_LOG_NAMES(name, version=version)
    # Determine verbosity level
    if debug:
        strLvl = logging.DEBUG
    elif verbose:
        strLvl = logging.INFO
    else:
        strLvl = logging.WARNING

    if tofile:
        # Make sure directory exists
        zio.checkPath(logFilename)
    else:
        logFilename = None

    # Repeated calls must not stack handlers
    prev = logging.getLogger(logName)
    for hand in list(prev.handlers):
        prev.removeHandler(hand)
    logger = zio.getLogger(logName, tofile=logFilename, fileLevel=logging.DEBUG, strLevel=strLvl)
    logger.propagate = False
    return logger
