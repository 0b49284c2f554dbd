"""Error taxonomy shared across the package.

Two failure families matter at the boundaries:

* ``GuardError`` -- a runtime guard rejected the request (argument out of
  the supported range, malformed configuration).  Subclasses ``ValueError``
  so callers that only know stdlib semantics still catch it.
* ``PrecisionError`` -- a verified numeric post-condition failed.  These
  are raised after the fact: the algorithm produced a witness, the witness
  was re-checked, and the check did not hold.
"""


class GuardError(ValueError):
    """A runtime guard rejected the arguments."""


class PrecisionError(RuntimeError):
    """A verified numeric post-condition did not hold."""
