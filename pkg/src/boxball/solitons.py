"""Soliton detection, affine labels, and the factorized scattering law.

A soliton is a maximal weakly decreasing non-vacuum run; under T_k an
isolated one moves min(k, l) cells per step.  Each soliton is labeled by
an affinized element over the reduced alphabet {1..n-1}: the reversed
content word with exponent minus the phase.  Two-body scattering swaps
labels through the R-matrix with an extra exponent shift of twice the
shorter length, and multi-body scattering factorizes into such swaps.
"""

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass

from .dynamics import State, evolve, spectrum
from .rmatrix import Affine, iso_with_energy

__all__ = [
    "Soliton",
    "ScatteringReport",
    "NotSeparatedError",
    "ScatteringBudgetError",
    "detect",
    "label",
    "predict_two_body",
    "predict_m_body",
    "run_scattering",
    "state_with_solitons",
    "row_insert",
    "bump_tableau",
    "format_tableau",
]


class NotSeparatedError(ValueError):
    """The state does not decompose into separated solitons."""


class ScatteringBudgetError(RuntimeError):
    """The step budget ran out before the outgoing solitons separated."""

    def __init__(self, message, last_time=None, last_solitons=None):
        super().__init__(message)
        self.last_time = last_time
        self.last_solitons = last_solitons


@dataclass(frozen=True)
class Soliton:
    """A localized excitation: content as read left to right, plus position and time."""

    length: int
    content: tuple
    position: int
    time: int


def _runs(p):
    """Maximal non-vacuum runs as (absolute position, letters)."""
    runs = []
    current = []
    start = None
    for idx, x in enumerate(p.cells):
        if x != p.n:
            if not current:
                start = p.origin + idx
            current.append(x)
        elif current:
            runs.append((start, tuple(current)))
            current = []
    if current:
        runs.append((start, tuple(current)))
    return runs


def detect(p, t=0, check_census=True):
    """Split a state into solitons, left to right.

    Succeeds only when every non-vacuum run is weakly decreasing and the
    run-length census matches the counts derived from the energy spectrum;
    both gates fail on mid-collision states.
    """
    runs = _runs(p)
    for pos, word in runs:
        if any(a < b for a, b in zip(word, word[1:])):
            raise NotSeparatedError(f"run at position {pos} is not weakly decreasing: {word}")
    if check_census:
        census = Counter(len(word) for _, word in runs)
        expected = spectrum(p).census()
        if dict(census) != expected:
            raise NotSeparatedError(f"run census {dict(census)} differs from spectral counts {expected}")
    return [Soliton(len(word), word, pos, t) for pos, word in runs]


def label(s, capacity=None):
    """The affine label of a soliton observed under T_capacity (T itself when None).

    The phase is position minus velocity times time, with velocity
    min(capacity, length); the element is the reversed content word.
    """
    if capacity is None or capacity == math.inf:
        velocity = s.length
    else:
        velocity = min(capacity, s.length)
    gamma = s.position - velocity * s.time
    return Affine(-gamma, tuple(reversed(s.content)))


def predict_two_body(a, b):
    """Scatter two labels with the left soliton strictly longer.

    Elements swap through the R-matrix over the reduced alphabet and the
    exponents shift by +-delta with delta = 2*len(short) + H.
    """
    l1, l2 = len(a.b), len(b.b)
    if l1 <= l2:
        raise ValueError(f"two-body rule requires the left soliton strictly longer, got {l1} <= {l2}")
    (c1, c2), h = iso_with_energy(a.b, b.b)
    delta = 2 * l2 + h
    return Affine(b.d + delta, c1), Affine(a.d - delta, c2)


def predict_m_body(labels, order=None):
    """Scatter labels with strictly decreasing lengths into fully reversed order.

    The reversal is composed from adjacent two-body swaps; `order` may give
    an explicit sequence of swap positions, and any valid order yields the
    same result (a consequence of the Yang-Baxter equation, property-tested).
    """
    labels = list(labels)
    lengths = [len(x.b) for x in labels]
    if len(set(lengths)) != len(lengths):
        raise ValueError(f"equal-length solitons are not supported, got lengths {lengths}")
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"lengths must be strictly decreasing, got {lengths}")
    if order is None:
        changed = True
        while changed:
            changed = False
            for i in range(len(labels) - 1):
                if len(labels[i].b) > len(labels[i + 1].b):
                    labels[i], labels[i + 1] = predict_two_body(labels[i], labels[i + 1])
                    changed = True
    else:
        for i in order:
            labels[i], labels[i + 1] = predict_two_body(labels[i], labels[i + 1])
        out_lengths = [len(x.b) for x in labels]
        if out_lengths != sorted(out_lengths):
            raise ValueError(f"swap order {list(order)!r} did not fully reverse the lengths")
    return tuple(labels)


@dataclass(frozen=True)
class ScatteringReport:
    in_labels: tuple
    out_labels_simulated: tuple
    out_labels_predicted: tuple
    match: bool
    tableau_in: tuple
    tableau_out: tuple
    final_state: State
    steps: int


def _separated_snapshot(state, t, rule, want_lengths):
    """Labels at time t if the state decomposes with exactly want_lengths."""
    runs = _runs(state)
    if [len(w) for _, w in runs] != want_lengths:
        return None
    if any(any(a < b for a, b in zip(w, w[1:])) for _, w in runs):
        return None
    try:
        sols = detect(state, t)
    except NotSeparatedError:
        return None
    return tuple(label(s, rule) for s in sols)


def run_scattering(p, rule=None, max_steps=400):
    """Evolve a separated multi-soliton state until the solitons reorder.

    The initial lengths must be strictly decreasing left to right.  The run
    stops once the state decomposes with the lengths fully reversed and the
    labels stay put for two further steps; the simulated outgoing labels are
    then compared against the factorized two-body prediction.
    """
    sols = detect(p, 0)
    lengths = [s.length for s in sols]
    if any(a <= b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"initial soliton lengths must be strictly decreasing, got {lengths}")
    if rule is not None and len(lengths) > 1 and rule <= lengths[1]:
        raise ValueError(f"evolution rule must exceed the second-longest soliton, got {rule} <= {lengths[1]}")
    in_labels = tuple(label(s, rule) for s in sols)
    predicted = predict_m_body(in_labels) if len(in_labels) > 1 else in_labels
    tab_in = bump_tableau(p)

    want = sorted(lengths)
    state = p
    t = 0
    last_good = (0, sols)
    while True:
        out = _separated_snapshot(state, t, rule, want)
        if out is not None:
            ahead = evolve(state, rule, 1)
            ahead2 = evolve(ahead, rule, 1)
            if (
                _separated_snapshot(ahead, t + 1, rule, want) == out
                and _separated_snapshot(ahead2, t + 2, rule, want) == out
            ):
                return ScatteringReport(
                    in_labels=in_labels,
                    out_labels_simulated=out,
                    out_labels_predicted=predicted,
                    match=out == predicted,
                    tableau_in=tab_in,
                    tableau_out=bump_tableau(state),
                    final_state=state,
                    steps=t,
                )
        try:
            last_good = (t, detect(state, t))
        except NotSeparatedError:
            pass
        if t >= max_steps:
            raise ScatteringBudgetError(
                f"no separated reordered state within {max_steps} steps;"
                f" last decomposable snapshot at t={last_good[0]}",
                last_time=last_good[0],
                last_solitons=last_good[1],
            )
        state = evolve(state, rule, 1)
        t += 1


def row_insert(rows, x):
    """Schensted row insertion of a single letter into a tableau (tuple of rows)."""
    rows = [list(r) for r in rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            break
        j = bisect_right(rows[i], x)
        if j == len(rows[i]):
            rows[i].append(x)
            break
        rows[i][j], x = x, rows[i][j]
        i += 1
    return tuple(tuple(r) for r in rows)


def bump_tableau(p):
    """The row-bumping tableau of a state.

    Letters are read right to left with the vacuum dropped, then inserted in
    order; the result is invariant under every time evolution.
    """
    rows = ()
    for x in reversed(p.cells):
        if x != p.n:
            rows = row_insert(rows, x)
    return rows


def format_tableau(rows):
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def state_with_solitons(placements, n, tail=2):
    """Build a state from (position, content) pairs, content as read left to right."""
    if not placements:
        return State((n,) * tail, n)
    if any(pos < 0 for pos, _ in placements):
        raise ValueError("soliton positions must be nonnegative")
    end = max(pos + len(word) for pos, word in placements)
    cells = [n] * (end + tail)
    for pos, word in placements:
        for k, x in enumerate(word):
            if not 1 <= x < n:
                raise ValueError(f"soliton letter {x!r} out of range 1..{n - 1}")
            if cells[pos + k] != n:
                raise ValueError(f"overlapping solitons at position {pos + k}")
            cells[pos + k] = x
    return State(cells, n)
