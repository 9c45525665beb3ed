import pytest

from boxball.dynamics import (
    State,
    carrier_pass,
    effective_capacity,
    energy,
    evolve,
    evolve_inverse,
    spectrum,
    trajectory,
)
from helpers import SINGLE_SOLITON_ROWS, THREE_SOLITON_ROWS, random_state, seeded


def test_state_text_round_trip():
    p = State.from_text("332...11...2", 4)
    assert p.cells[:3] == (3, 3, 2)
    assert p.to_text() == "332...11...2"
    q = State.from_text("@-3 ..21", 4)
    assert q.origin == -3
    assert q.to_text() == "@-3 ..21"
    with pytest.raises(ValueError, match="column 3"):
        State.from_text("..x1", 4)
    with pytest.raises(ValueError):
        State.from_text("15", 4)  # 5 exceeds the alphabet


def test_trim():
    p = State.from_text("..12..", 4)
    t = p.trim()
    assert t.cells == (1, 2) and t.origin == 2
    assert State.from_text("....", 4).trim() == State((), 4, 0)
    assert t.trim() == t


def test_single_soliton_displays():
    state = State.from_text(SINGLE_SOLITON_ROWS[0], 4)
    for expected in SINGLE_SOLITON_ROWS[1:]:
        state = evolve(state, 3, 1)
        assert state.to_text() == expected


def test_three_soliton_displays():
    state = State.from_text(THREE_SOLITON_ROWS[0], 4)
    for expected in THREE_SOLITON_ROWS[1:]:
        state = evolve(state, None, 1)
        assert state.to_text() == expected


def test_carrier_pass_all_vacuum():
    p = State.from_text(".....", 4)
    trace = carrier_pass(p, 3)
    assert trace.out_state == p
    assert set(trace.h_values) <= {0}
    assert trace.final_carrier == (4, 4, 4)
    assert energy(p, 2) == 0


def test_carrier_trace_shape():
    p = State.from_text("332", 4)
    trace = carrier_pass(p, 3)
    assert len(trace.h_values) == len(trace.out_state.cells)
    assert trace.final_carrier == (4, 4, 4)
    assert trace.out_state.to_text() == "...332"
    assert trace.h_values == (0, 0, 0, -1, -1, -1)


def test_single_soliton_energies():
    p = State.from_text("..332..", 4)
    assert [energy(p, k) for k in (1, 2, 3, 4, 5)] == [1, 2, 3, 3, 3]


def test_three_soliton_energies():
    # lengths 3, 2, 1: E_l should match the census sum of min(k, l)
    p = State.from_text(THREE_SOLITON_ROWS[0], 4)
    lengths = (3, 2, 1)
    for l in range(1, 6):
        assert energy(p, l) == sum(min(k, l) for k in lengths)
    assert [energy(p, l) for l in (1, 2, 3, 4)] == [3, 5, 6, 6]


def test_spectrum():
    p = State.from_text(THREE_SOLITON_ROWS[0], 4)
    spec = spectrum(p)
    assert spec.census() == {1: 1, 2: 1, 3: 1}
    assert spec.e_values[0] == 0
    # second-difference values reproduce the energies
    for l in range(1, 5):
        assert spec.e_values[l] == sum(min(k, l) * c for k, c in spec.n_values.items())

    assert spectrum(State.from_text("...", 4)).census() == {}
    assert spectrum(State.from_text("..332..", 4)).census() == {3: 1}


def test_energy_monotone_and_stabilizing():
    rng = seeded(31)
    for _ in range(200):
        p = random_state(rng)
        k = max(1, p.nonvacuum_count)
        values = [energy(p, l) for l in range(1, k + 3)]
        assert all(a <= b for a, b in zip(values, values[1:]))
        assert values[k - 1] == values[k] == values[k + 1]


def test_conservation_and_commutation():
    rng = seeded(12)
    for _ in range(150):
        p = random_state(rng)
        e = {l: energy(p, l) for l in range(1, 6)}
        q = {l: evolve(p, l, 1) for l in range(1, 6)}
        for l in range(1, 6):
            for lp in range(1, 6):
                assert energy(q[lp], l) == e[l]
            for lp in range(l + 1, 6):
                assert evolve(q[lp], l, 1).trim() == evolve(q[l], lp, 1).trim()


def test_letter_content_conserved():
    rng = seeded(3)
    for _ in range(100):
        p = random_state(rng)
        for l in (1, 2, 4):
            assert evolve(p, l, 1).letters() == p.letters()


def test_full_evolution_matches_saturated_capacity():
    rng = seeded(9)
    for _ in range(50):
        p = random_state(rng)
        k = effective_capacity(p)
        assert evolve(p, None, 1).trim() == evolve(p, k, 1).trim()
        assert evolve(p, None, 1).trim() == evolve(p, k + 2, 1).trim()


def test_inverse_round_trip():
    rng = seeded(4)
    for _ in range(120):
        p = random_state(rng)
        for l in (1, 2, 3, 4):
            assert evolve_inverse(evolve(p, l, 1), l).trim() == p.trim()
            assert evolve(evolve_inverse(p, l), l, 1).trim() == p.trim()


def test_inverse_of_soliton_row():
    row2 = State.from_text(SINGLE_SOLITON_ROWS[1], 4)
    back = evolve_inverse(row2, 3)
    assert back.trim() == State.from_text(SINGLE_SOLITON_ROWS[0], 4).trim()
    vac = State.from_text("....", 4)
    assert evolve_inverse(vac, 2).trim() == vac.trim()


def test_trajectory_records_each_step():
    p = State.from_text(THREE_SOLITON_ROWS[0], 4)
    traces = trajectory(p, None, 3)
    assert [t.out_state.to_text() for t in traces] == THREE_SOLITON_ROWS[1:4]
    assert -sum(traces[0].h_values) == energy(p, effective_capacity(p))
    assert trajectory(p, None, 0) == []
    assert evolve(p, None, 0) == p


def test_multistep_evolution():
    p = State.from_text(THREE_SOLITON_ROWS[0], 4)
    assert evolve(p, None, 6).to_text() == THREE_SOLITON_ROWS[6]
    a = evolve(evolve(p, 2, 1), 3, 1)
    b = evolve(evolve(p, 3, 1), 2, 1)
    assert a.trim() == b.trim()


def test_capacity_validation():
    p = State.from_text("12", 4)
    with pytest.raises(ValueError):
        carrier_pass(p, 0)
    with pytest.raises(ValueError):
        evolve_inverse(p, 0)
    with pytest.raises(ValueError):
        trajectory(p, 2, -1)
