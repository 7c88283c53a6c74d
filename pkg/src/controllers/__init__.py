"""
Controllers package for orchestrating workflows.

The command-line controller parses requests and renders service results.
"""

from .cli_controller import CLIController, CommandRequest, StreamMessageHandler

__all__ = [
    "CLIController",
    "CommandRequest",
    "StreamMessageHandler"
]
