"""Exception types shared across the package."""


class AspnfError(Exception):
    """Base class for all errors raised by aspnf."""


class ReservedAtomError(AspnfError):
    """A user-supplied atom uses the reserved ``__`` prefix."""


class UniverseTooLargeError(AspnfError):
    """The program exceeds the answer-set enumeration cap."""


class CycleCapExceededError(AspnfError):
    """Cycle enumeration exceeded the configured cycle-count cap."""


class NegativeBodyError(AspnfError):
    """A negation-free program was required but a negative literal occurs."""


class KernelFormError(AspnfError):
    """A transformation precondition (kernel form) does not hold."""


class BridgeNotFoundError(AspnfError):
    """The bridge passed to a simplification is not present in the program."""


class ReconstructionError(AspnfError):
    """An answer-set reconstruction formula references an unknown atom."""


class MalformedAnswerSetError(AspnfError):
    """An interpretation does not have the shape an operation requires."""


class GenerationFailedError(AspnfError):
    """Random program generation ran out of retries."""
