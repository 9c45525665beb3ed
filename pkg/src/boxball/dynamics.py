"""Box-ball states and the carrier time evolutions.

A state is a finite window of letters in {1..n}, conceptually padded by
the vacuum letter n on both sides.  The time evolution T_l threads a
capacity-l carrier through the cells left to right; the recorded local
h values sum to the conserved quantities E_l, and their second
differences count solitons by length.
"""

from dataclasses import dataclass

from .rmatrix import iso_single, iso_single_inverse


class State:
    """Cells of a box-ball configuration with an absolute origin offset.

    Cells are stored as a tuple; positions are counted from ``origin`` so
    evolution (which may extend the window) never renumbers existing cells.
    Text form uses '.' for the vacuum letter and digits for the rest, with
    an optional "@k " prefix carrying a nonzero origin.
    """

    __slots__ = ("n", "origin", "cells")

    def __init__(self, cells, n, origin=0):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {n!r}")
        cells = tuple(cells)
        for x in cells:
            if not isinstance(x, int) or not 1 <= x <= n:
                raise ValueError(f"cell letter {x!r} out of range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "origin", int(origin))
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("State is immutable")

    def __eq__(self, other):
        if not isinstance(other, State):
            return NotImplemented
        return (self.n, self.origin, self.cells) == (other.n, other.origin, other.cells)

    def __hash__(self):
        return hash((self.n, self.origin, self.cells))

    def __repr__(self):
        return f"State({self.to_text()!r}, n={self.n})"

    @property
    def nonvacuum_count(self):
        return sum(1 for x in self.cells if x != self.n)

    def letters(self):
        """Sorted multiset of non-vacuum letters."""
        return tuple(sorted(x for x in self.cells if x != self.n))

    def trim(self):
        """Canonical form: outer vacuum stripped, origin adjusted."""
        cells = self.cells
        lo = 0
        hi = len(cells)
        while lo < hi and cells[lo] == self.n:
            lo += 1
        while hi > lo and cells[hi - 1] == self.n:
            hi -= 1
        if lo == hi:
            return State((), self.n, 0)
        return State(cells[lo:hi], self.n, self.origin + lo)

    def to_text(self):
        if self.n > 9:
            body = ",".join("." if x == self.n else str(x) for x in self.cells)
        else:
            body = "".join("." if x == self.n else str(x) for x in self.cells)
        if self.origin:
            return f"@{self.origin} {body}"
        return body

    @classmethod
    def from_text(cls, text, n):
        s = text.strip()
        origin = 0
        if s.startswith("@"):
            head, _, rest = s.partition(" ")
            try:
                origin = int(head[1:])
            except ValueError:
                raise ValueError(f"bad origin prefix {head!r}") from None
            s = rest.strip()
        cells = []
        for col, ch in enumerate(s, start=1):
            if ch == ".":
                cells.append(n)
            elif ch.isdigit() and 1 <= int(ch) <= n:
                cells.append(int(ch))
            else:
                raise ValueError(f"column {col}: unexpected character {ch!r}")
        return cls(cells, n, origin)


@dataclass(frozen=True)
class CarrierTrace:
    """One carrier sweep: transformed cells, local h values, final carrier."""

    out_state: State
    h_values: tuple
    final_carrier: tuple


def carrier_pass(p, l):
    """Sweep a capacity-l carrier across the state, left to right.

    The carrier starts as all vacuum; vacuum cells are appended on the right
    until it drains back to all vacuum, so the trace always covers the full
    interaction.  One h value in {-1, 0} is recorded per processed cell.
    """
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"carrier capacity must be an integer >= 1, got {l!r}")
    n = p.n
    vacuum = (n,) * l
    carrier = vacuum
    out = []
    hs = []
    cells = p.cells
    cap = len(cells) + l * (p.nonvacuum_count + 1)
    i = 0
    while i < len(cells) or carrier != vacuum:
        if i > cap:
            raise RuntimeError("carrier failed to drain within the padding cap")
        v = cells[i] if i < len(cells) else n
        w, carrier, h = iso_single(carrier, v)
        out.append(w)
        hs.append(h)
        i += 1
    return CarrierTrace(State(out, n, p.origin), tuple(hs), carrier)


def energy(p, l):
    """The conserved quantity E_l: minus the sum of the carrier h values."""
    return -sum(carrier_pass(p, l).h_values)


def effective_capacity(p):
    """Capacity at which T_l has saturated for this state."""
    return max(1, p.nonvacuum_count)


def trajectory(p, capacity=None, steps=1):
    """Apply the time evolution repeatedly, returning one CarrierTrace per step.

    capacity None means the full evolution T: the carrier capacity is taken
    as the number of non-vacuum letters, and each step is verified against
    capacity + 1 to confirm saturation.
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps!r}")
    traces = []
    state = p
    for _ in range(steps):
        if capacity is None:
            cap = effective_capacity(state)
            trace = carrier_pass(state, cap)
            check = carrier_pass(state, cap + 1)
            if trace.out_state.trim() != check.out_state.trim():
                raise RuntimeError(f"evolution not saturated at capacity {cap}")
        else:
            trace = carrier_pass(state, capacity)
        traces.append(trace)
        state = trace.out_state
    return traces


def evolve(p, capacity=None, steps=1):
    """The state after `steps` applications of T_capacity (T itself when None)."""
    traces = trajectory(p, capacity, steps)
    return traces[-1].out_state if traces else p


def evolve_inverse(p, l, steps=1):
    """Undo T_l: right-to-left sweep with the inverse exchange.

    Vacuum cells are consumed from the conceptual left padding (the window
    grows leftward, lowering the origin) until the carrier drains.
    """
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"carrier capacity must be an integer >= 1, got {l!r}")
    state = p
    for _ in range(steps):
        n = state.n
        vacuum = (n,) * l
        carrier = vacuum
        out = []
        for v in reversed(state.cells):
            carrier, w = iso_single_inverse(v, carrier)
            out.append(w)
        out.reverse()
        prepended = 0
        while carrier != vacuum:
            if prepended > l:
                raise RuntimeError("inverse carrier failed to drain")
            carrier, w = iso_single_inverse(n, carrier)
            out.insert(0, w)
            prepended += 1
        state = State(out, n, state.origin - prepended)
    return state


@dataclass(frozen=True)
class EnergySpectrum:
    """E_l for l = 0..top and the soliton counts N_l = -E_{l-1} + 2E_l - E_{l+1}."""

    e_values: dict
    n_values: dict

    def census(self):
        """Lengths with a nonzero count, as {length: count}."""
        return {l: c for l, c in self.n_values.items() if c}


def spectrum(p, l_max=None):
    """Energies and soliton counts, computed past the stabilization point.

    E_l is constant for l at or beyond the number of non-vacuum letters, so
    sweeping up to that point (plus one, for the second difference) covers
    every nonzero N_l.
    """
    top = max(1, p.nonvacuum_count, l_max or 0) + 1
    e = {0: 0}
    for l in range(1, top + 2):
        e[l] = energy(p, l)
    nvals = {l: -e[l - 1] + 2 * e[l] - e[l + 1] for l in range(1, top + 1)}
    return EnergySpectrum(e, nvals)
