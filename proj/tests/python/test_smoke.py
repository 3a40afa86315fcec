import pytest

import sokoban_lab as sl

L1 = "#####\n#@$.#\n#####"
L3 = "#######\n#@  $.#\n#######"
LDEAD = "#####\n#@$ #\n#  .#\n#####"


def config(kind, heuristic=sl.HeuristicKind.PrePaired, **kw):
    return sl.StrategyConfig(kind=kind, heuristic=heuristic, **kw)


def test_parse_and_render_round_trip():
    g = sl.parse_level(L1)
    assert (g.width, g.height) == (5, 3)
    assert sl.render(g, g.initial_boxes, g.initial_pusher) == L1


def test_parse_error_carries_code():
    with pytest.raises(sl.SokobanError) as info:
        sl.parse_level("#####\n#@$ #\n#####")
    assert info.value.code == "BoxGoalCountMismatch"
    assert isinstance(info.value, ValueError)


def test_solve_l1_every_strategy():
    g = sl.parse_level(L1)
    for kind in (sl.StrategyKind.DFS, sl.StrategyKind.BFS, sl.StrategyKind.DF_ASTAR,
                 sl.StrategyKind.BF_ASTAR, sl.StrategyKind.IDASTAR):
        solution, metrics = sl.solve(g, config(kind))
        assert metrics.outcome == sl.Outcome.Solved
        assert metrics.solution_steps == 1
        assert sl.pushes_to_moves(g, solution) == "R"
        valid, failed, _ = sl.validate_solution(g, solution)
        assert valid and failed is None


def test_unsolvable_and_limits():
    solution, metrics = sl.solve(sl.parse_level(LDEAD), config(sl.StrategyKind.BFS))
    assert solution is None
    assert metrics.outcome == sl.Outcome.NoSolution
    assert metrics.solution_steps is None

    corridor = sl.parse_level("########\n#@$   .#\n########")
    solution, metrics = sl.solve(corridor, config(sl.StrategyKind.BFS, node_limit=1))
    assert solution is None
    assert metrics.outcome == sl.Outcome.LimitExceeded


def test_push_mechanics_and_deadlocks():
    g = sl.parse_level(L3)
    s = sl.initial_state(g)
    pushes = sl.legal_pushes(g, s)
    assert len(pushes) == 1
    after = sl.apply_push(g, s, pushes[0])
    assert sl.is_goal_state(g, after)
    assert sl.h_prepaired(g, s) == 1 and sl.h_nearest_goal(g, s) == 1
    dead = sl.dead_squares(sl.parse_level(L1))
    assert [tuple(sq) for sq in dead] == [(1, 1)]


def test_animation_frames():
    g = sl.parse_level(L3)
    solution, _ = sl.solve(g, config(sl.StrategyKind.BF_ASTAR, sl.HeuristicKind.NearestGoal))
    frames = sl.animate(g, solution)
    assert len(frames) == 4
    assert frames[-1] == "#######\n#   @*#\n#######"
    assert sl.animate_moves(g, "rrR") == frames


def test_bench_table():
    levels = [("L1", sl.parse_level(L1)), ("L3", sl.parse_level(L3))]
    configs = [config(sl.StrategyKind.BFS), config(sl.StrategyKind.DFS)]
    records = sl.run_matrix(levels, configs, workers=2)
    assert [(r.level_id, r.metrics.solution_steps) for r in records] == [
        ("L1", 1), ("L1", 1), ("L3", 1), ("L3", 1)]
    table = sl.format_table(records, "csv")
    assert "AI Strategy,Solution Steps (#),Elapsed Time (s),Nodes Expanded" in table
    assert "# level: L3" in table
