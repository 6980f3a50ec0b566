"""Type definitions for tool functions."""

from typing import Any, Dict

from ..utils.constants import exit_code_for

# Common return type for all tool functions
ToolResponse = Dict[str, Any]


def failure(action: str, error: Exception) -> ToolResponse:
    """Failed response carrying the CLI exit code for ``error``."""
    return {"success": False, "error": f"Failed to {action}: {error}", "exit_code": exit_code_for(error)}
