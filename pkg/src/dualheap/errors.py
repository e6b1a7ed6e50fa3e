class InternalInvariantError(RuntimeError):
    """A state the algorithms guarantee can never occur was observed.

    Raised by the swapping-phase step budget and by the benchmark runner's
    oracle gate. The CLI maps this to exit code 2.
    """


class OracleMismatchError(InternalInvariantError):
    """A benchmark trial disagreed with the sort oracle."""
