"""Maximal (delta, gamma)-clique enumeration over link streams, batch by batch."""

from typing import List, NamedTuple, Tuple

from ._eoc import (
    BatchState,
    ConfigError,
    ContractViolation,
    EmptyStreamError,
    Error,
    LinkStream,
    OracleBoundsError,
    ParseError,
    RangeError,
    StateError,
    brute_force,
    is_clique,
    is_maximal,
    partition,
    run,
)


class Clique(NamedTuple):
    vertices: Tuple[int, ...]
    start: int
    end: int

    def __str__(self) -> str:
        return f"{','.join(map(str, self.vertices))} [{self.start},{self.end}]"


def as_cliques(rows) -> List[Clique]:
    return [Clique(tuple(v), a, b) for v, a, b in rows]


def enumerate_cliques(stream: LinkStream, delta: int, gamma: int, **kwargs) -> List[Clique]:
    """Finalized maximal cliques; keyword arguments go to `run`."""
    return as_cliques(run(stream, delta, gamma, **kwargs)["result"])


__all__ = [
    "BatchState",
    "Clique",
    "ConfigError",
    "ContractViolation",
    "EmptyStreamError",
    "Error",
    "LinkStream",
    "OracleBoundsError",
    "ParseError",
    "RangeError",
    "StateError",
    "as_cliques",
    "brute_force",
    "enumerate_cliques",
    "is_clique",
    "is_maximal",
    "partition",
    "run",
]
