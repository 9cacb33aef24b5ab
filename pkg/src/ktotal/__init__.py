"""
ktotal
======

Exact k-total rewards of eventually periodic reward streams, and
solutions of deterministic two-player games under k-total payoffs.
"""

import asyncio
from .server import main as async_main


def main():
    """Synchronous wrapper for the async MCP server."""
    asyncio.run(async_main())


__version__ = "0.1.0"
__all__ = ["main"]
