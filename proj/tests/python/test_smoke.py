import json
import math
import subprocess
import os

import pytest

import arena


def test_algorithm_roster():
    names = arena.algorithms()
    assert len(names) == 10
    assert "dijkstra" in names and "strassen" in names


def test_worked_examples():
    out = arena.solve_reference("dijkstra", "5\n6\n1 2 10\n1 3 5\n2 4 1\n3 2 2\n3 5 9\n5 4 4\n1\n")
    assert out == "0 7 5 8 14\n"
    assert arena.solve_reference("strassen", "2\n1 2\n3 4\n5 6\n7 8\n") == "19 22\n43 50\n"
    assert arena.solve_naive("gray", "1\n3\n") == arena.solve_reference("gray", "1\n3\n") == "2\n"


def test_reward_truth_table():
    paying = [(k, c, u) for k in (0, 1) for c in (0, 1) for u in (0, 1)
              if arena.reward(k, c, u) == 1]
    assert paying == [(0, 0, 1)]


def test_rl_math():
    adv = arena.group_advantages([1.0, 0.0, 0.0, 0.0])
    assert abs(sum(adv)) < 1e-9
    assert abs(adv[0] - 1.7320508) < 1e-6

    assert arena.clipped_surrogate(1.5, 1.0, 0.2) == pytest.approx(1.2)
    assert arena.kl_penalty([-1.0, -2.0], [-1.0, -2.0]) == 0.0
    assert arena.calibrated_advantages([0.0, 0.0, 0.0, 0.0]) == pytest.approx([-0.5] * 4)
    assert arena.ttrl_reward("Accepted! Passed all 2 cases. Max Time: 1.350s.") == pytest.approx(1 / 1.35)
    assert arena.ttrl_reward("Failed: Wrong Answer on Case 1.") == 0.0


def test_verdict_round_trip():
    v = arena.parse_verdict("Failed: Timeout after 5.0 seconds on Case 1.")
    assert v["kind"] == "timeout" and v["case_no"] == 1 and v["limit_s"] == 5.0


def test_extract_json_block():
    obj = json.loads(arena.extract_json_block('text {"a": 1} more {"a": 2}'))
    assert obj == {"a": 2}


def test_judge_prompt_and_labels():
    prompt = arena.render_judge_prompt("dijkstra", "q", "r")
    assert "know_or_not" in prompt and "Dijkstra" in prompt
    assert arena.aggregate_labels([1, 1, 0, 1, 0]) == 1
    assert arena.aggregate_labels([1, 0]) == 0  # ties fall to 0


def test_bundle_and_grading_round_trip():
    bundle = arena.generate_bundle_jsonl("dijkstra", variants=1, seed=3)
    spec_json = bundle.splitlines()[0]
    spec = json.loads(spec_json)
    assert spec["algo"] == "dijkstra"
    verdict = arena.run_submission(arena.reference_guest_code("dijkstra"), spec_json)
    assert verdict["kind"] == "accepted"
    assert verdict["message"].startswith("Accepted! Passed all")


def test_cli_available():
    exe = os.environ.get("ARENA_BIN")
    if not exe:
        pytest.skip("ARENA_BIN not set")
    out = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for sub in ("gen-tasks", "reinvent", "forget-eval", "coldstart-gen", "analyze", "calibrate"):
        assert sub in out.stdout
