"""EV charging requests: validation, sampling, grouping and canonical vertices.

An EV is described by the tuple (energy, arrival, departure, power): it may
draw between 0 and ``power`` kW during each unit-length step of the half-open
window [arrival, departure) and must have received exactly ``energy`` kWh by
departure.  The set of feasible charging profiles is nonempty iff
``0 <= energy <= (departure - arrival) * power`` and collapses to a single
point when the upper bound is attained.

Every feasible set has exactly one nonincreasing vertex, obtained by charging
at full power for as many steps as possible and placing the remainder in the
next step.  Fleets are grouped by exact (arrival, departure) windows and the
vertices of each group are accumulated elementwise; the accumulated vertex is
all downstream modules ever need about a group.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BadWindow, InfeasibleRequest, NonpositivePower

# Guards the floor() in the full-power/remainder split against energies that
# are exact multiples of the power cap but stored inexactly.
QUOTIENT_EPS = 1e-12


@dataclass(frozen=True)
class TimeHorizon:
    """A finite horizon of ``n`` unit-duration time steps, indexed 1..n."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise BadWindow(f"horizon must be a positive integer, got {self.n!r}")


@dataclass(frozen=True, order=True)
class Window:
    """Half-open activity window [a, d): arrival step a, departure step d."""

    a: int
    d: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.d, int)):
            raise BadWindow(f"window bounds must be integers, got ({self.a!r}, {self.d!r})")
        if self.a < 1 or self.a >= self.d:
            raise BadWindow(f"need 1 <= a < d, got a={self.a}, d={self.d}")

    @property
    def length(self) -> int:
        return self.d - self.a

    def check_within(self, horizon: TimeHorizon) -> None:
        if self.d > horizon.n + 1:
            raise BadWindow(
                f"window ({self.a}, {self.d}) exceeds horizon of {horizon.n} steps"
            )

    def slice(self) -> slice:
        """0-based slice selecting this window from a horizon-length vector."""
        return slice(self.a - 1, self.d - 1)


@dataclass(frozen=True)
class EvRequest:
    """One vehicle's charging requirement."""

    id: str
    arrival: int
    departure: int
    energy: float
    power: float

    @property
    def window(self) -> Window:
        return Window(self.arrival, self.departure)

    @property
    def duration(self) -> int:
        return self.departure - self.arrival

    @property
    def is_singleton(self) -> bool:
        """True when the energy demand forces full power at every active step."""
        return _quotient(self.energy, self.power) >= self.duration

    @property
    def is_zero(self) -> bool:
        return self.energy == 0.0


def _quotient(energy: float, power: float) -> int:
    return int(np.floor(energy / power + QUOTIENT_EPS))


def validate(request: EvRequest, horizon: TimeHorizon) -> EvRequest:
    """Return ``request`` unchanged if it is feasible within ``horizon``.

    Raises NonpositivePower, BadWindow or InfeasibleRequest otherwise.  A
    request with ``energy == duration * power`` is valid but has a single
    feasible profile (no flexibility); ``energy == 0`` is also valid.
    """
    if not (request.power > 0):
        raise NonpositivePower(f"{request.id}: power must be > 0, got {request.power}")
    if request.arrival >= request.departure:
        raise BadWindow(
            f"{request.id}: arrival {request.arrival} must precede departure {request.departure}"
        )
    window = request.window  # validates a >= 1, a < d
    window.check_within(horizon)
    if request.energy < 0:
        raise InfeasibleRequest(f"{request.id}: negative energy {request.energy}")
    cap = request.duration * request.power
    if request.energy > cap:
        raise InfeasibleRequest(
            f"{request.id}: energy {request.energy} exceeds window capacity {cap}"
        )
    return request


@dataclass(frozen=True, eq=False)
class MonotoneVertex:
    """The unique nonincreasing vertex of a feasible set, paired with its window.

    ``values`` has one entry per active step, is nonincreasing, nonnegative,
    and is stored read-only.
    """

    values: np.ndarray
    window: Window

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size != self.window.length:
            raise BadWindow(
                f"vertex of length {arr.size} does not fit window "
                f"({self.window.a}, {self.window.d})"
            )
        if arr.size > 1 and np.any(np.diff(arr) > 0):
            raise InfeasibleRequest("monotone vertex must be nonincreasing")
        if arr.size and arr[-1] < 0:
            raise InfeasibleRequest("monotone vertex must be nonnegative")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size

    @property
    def total(self) -> float:
        return float(self.values.sum())


def monotone_vertex(request: EvRequest) -> MonotoneVertex:
    """Canonical nonincreasing vertex of ``request``'s feasible set.

    Charges at full power for ``floor(energy / power)`` steps, places the
    remainder in the next step and zeros elsewhere.
    """
    p = request.duration
    m = request.power
    q = min(_quotient(request.energy, m), p)
    r = min(max(request.energy - q * m, 0.0), m)
    values = np.zeros(p)
    values[:q] = m
    if q < p:
        values[q] = r
    return MonotoneVertex(values, request.window)


@dataclass(frozen=True)
class Block:
    """All EVs sharing one window, reduced to their accumulated vertex."""

    window: Window
    vertex: MonotoneVertex
    members: tuple[str, ...] = field(default_factory=tuple)

    @property
    def total_energy(self) -> float:
        return self.vertex.total


def group_and_accumulate(fleet: Sequence[EvRequest]) -> dict[Window, Block]:
    """Partition ``fleet`` by exact (arrival, departure) window and sum vertices.

    The elementwise sum of nonincreasing vectors is nonincreasing, so each
    block's accumulated vertex is again a valid monotone vertex.  Blocks are
    returned sorted by window for deterministic downstream iteration.
    """
    sums: dict[Window, np.ndarray] = {}
    members: dict[Window, list[str]] = {}
    for request in fleet:
        w = request.window
        v = monotone_vertex(request)
        if w in sums:
            sums[w] = sums[w] + v.values
            members[w].append(request.id)
        else:
            sums[w] = v.values.copy()
            members[w] = [request.id]
    return {
        w: Block(w, MonotoneVertex(sums[w], w), tuple(members[w]))
        for w in sorted(sums)
    }


def sample_fleet(seed: int, count: int, horizon: TimeHorizon) -> list[EvRequest]:
    """Draw ``count`` strictly flexible requests, reproducibly from ``seed``.

    Windows are uniform over all valid (arrival, departure) pairs, power is
    uniform on [0.5, 3.0] kW, and energy is uniform on the open interval
    (0, duration * power), so no sampled EV is a singleton or a zero request.
    """
    if count < 1:
        raise InfeasibleRequest(f"fleet size must be >= 1, got {count}")
    if horizon.n < 2:
        raise BadWindow("sampling needs a horizon of at least 2 steps")
    rng = np.random.default_rng(seed)
    pairs = [(a, d) for a in range(1, horizon.n + 1) for d in range(a + 1, horizon.n + 2)]
    picks = rng.integers(0, len(pairs), size=count)
    powers = rng.uniform(0.5, 3.0, size=count)
    fractions = rng.uniform(0.0, 1.0, size=count)

    requests = []
    for i in range(count):
        a, d = pairs[picks[i]]
        m = float(powers[i])
        cap = (d - a) * m
        energy = float(fractions[i] * cap)
        while not (0.0 < energy < cap):  # excluded endpoints have measure ~0
            energy = float(rng.uniform(0.0, 1.0) * cap)
        requests.append(
            validate(EvRequest(f"ev{i + 1}", a, d, energy, m), horizon)
        )
    return requests


def fleet_energy(fleet: Iterable[EvRequest]) -> float:
    return float(sum(r.energy for r in fleet))
