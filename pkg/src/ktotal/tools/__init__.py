"""
Tools for the ktotal MCP Server
===============================

One module per command. Each provides a ``run_*`` function returning a
report, an MCP tool definition and an async handler.
"""

from .evaluate import eval_tool, handle_eval, run_eval
from .solve import handle_solve, run_solve, solve_tool
from .split import handle_split, run_split, split_tool
from .check import check_tool, handle_check, run_check
from .decompose import decompose_tool, handle_decompose, run_decompose

__all__ = [
    "eval_tool",
    "handle_eval",
    "run_eval",
    "solve_tool",
    "handle_solve",
    "run_solve",
    "split_tool",
    "handle_split",
    "run_split",
    "check_tool",
    "handle_check",
    "run_check",
    "decompose_tool",
    "handle_decompose",
    "run_decompose",
]
