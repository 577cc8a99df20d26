"""Python bindings for the hierarchical world-model toolkit."""

from ._hwm import (
    PuppetEnv,
    generate_clips,
    rest_height,
    run_cli,
    score_table,
    task_names,
    tracking_reward,
)

__all__ = [
    "PuppetEnv",
    "generate_clips",
    "rest_height",
    "run_cli",
    "score_table",
    "task_names",
    "tracking_reward",
]
