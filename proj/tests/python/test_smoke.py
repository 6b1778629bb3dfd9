import pytest

import clobber


def test_board_basics():
    board = clobber.checkerboard(2, 2)
    assert len(board) == 4
    assert clobber.delta(board) == 4
    assert len(clobber.legal_moves(board, "W")) == 4
    text = clobber.format_board(board)
    assert clobber.parse_board(text) == board
    cfg = clobber.Configuration({(0, 0): "B", (0, 1): "B"})
    assert clobber.delta_class(cfg) == 0


def test_line_reduction():
    plan = clobber.reduce_line(7)
    end, report = clobber.replay(clobber.psi_line(7), plan, alternating=True)
    assert len(end) == clobber.line_bound(7) == 3
    assert report["alternating"]


def test_rect_reduction():
    assert clobber.classify_case(8, 8) == "EE"
    plan = clobber.reduce_rect(5, 7)
    end, _ = clobber.replay(clobber.checkerboard(5, 7), plan, alternating=True)
    assert len(end) == 1


def test_solver():
    k, witness = clobber.min_stones(clobber.psi_line(5), mode="either")
    assert k == 2
    end, _ = clobber.replay(clobber.psi_line(5), witness, alternating=True)
    assert len(end) == 2
    ok, plan = clobber.is_one_reducible(clobber.checkerboard(3, 4))
    assert not ok and plan is None
    with pytest.raises(clobber.ClobberError):
        clobber.min_stones(clobber.checkerboard(5, 6), mode="free")


def test_gadget_round_trip():
    graph = [(0, 0), (1, 0), (0, 1), (1, 1)]
    circuit = clobber.ham_brute(graph)
    assert circuit is not None
    plan = clobber.circuit_to_plan(graph, circuit)
    assert len(plan) == 9
    end, _ = clobber.replay(clobber.build_gadget(graph), plan, alternating=True)
    assert len(end) == 1
    assert sorted(clobber.plan_to_circuit(graph, plan)) == sorted(graph)


def test_suite():
    passed, text = clobber.run_suite("table1")
    assert passed
    assert "result: pass" in text
