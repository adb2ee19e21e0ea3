"""Python face of the arena reinvention harness.

The heavy lifting lives in the native module; this package re-exports the
operations most useful from notebooks and quick scripts.
"""

from arena._core import (
    aggregate_labels,
    algorithms,
    calibrated_advantages,
    clipped_surrogate,
    extract_json_block,
    generate_bundle_jsonl,
    group_advantages,
    kl_penalty,
    parse_verdict,
    reference_guest_code,
    render_judge_prompt,
    reward,
    run_submission,
    solve_naive,
    solve_reference,
    ttrl_reward,
)

__all__ = [
    "aggregate_labels",
    "algorithms",
    "calibrated_advantages",
    "clipped_surrogate",
    "extract_json_block",
    "generate_bundle_jsonl",
    "group_advantages",
    "kl_penalty",
    "parse_verdict",
    "reference_guest_code",
    "render_judge_prompt",
    "reward",
    "run_submission",
    "solve_naive",
    "solve_reference",
    "ttrl_reward",
]
