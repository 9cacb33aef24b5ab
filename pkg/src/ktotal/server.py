"""
ktotal MCP Server
=================

Exposes the ktotal commands as MCP tools over stdio.
"""

import logging
import mcp.types as types
from typing import Dict, Any, List
from mcp.server import Server
from mcp.server.models import InitializationOptions
from mcp.server import NotificationOptions
from mcp.server.stdio import stdio_server
from .config import Settings
from .tools import (
    handle_eval,
    eval_tool,
    handle_solve,
    solve_tool,
    handle_split,
    split_tool,
    handle_check,
    check_tool,
    handle_decompose,
    decompose_tool,
)

settings = Settings()
logger = logging.getLogger("ktotal-mcp-server")
logger.setLevel(logging.INFO)
server = Server(settings.app_name)

HANDLERS = {
    "eval": handle_eval,
    "solve": handle_solve,
    "split": handle_split,
    "check": handle_check,
    "decompose": handle_decompose,
}


@server.list_tools()
async def list_tools() -> List[types.Tool]:
    """List available k-total reward tools."""
    return [eval_tool, solve_tool, split_tool, check_tool, decompose_tool]


@server.call_tool()
async def call_tool(name: str, arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Dispatch a tool call to its handler."""
    logger.debug(f"Calling tool {name} with arguments {arguments}")
    try:
        handler = HANDLERS.get(name)
        if handler is None:
            return [types.TextContent(type="text", text=f"Error: Unknown tool {name}")]
        return await handler(arguments or {})
    except Exception as e:
        logger.error(f"Tool error: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]


async def main():
    """Run the server async context."""
    async with stdio_server() as streams:
        await server.run(
            streams[0],
            streams[1],
            InitializationOptions(
                server_name=settings.app_name,
                server_version=settings.app_version,
                capabilities=server.get_capabilities(
                    notification_options=NotificationOptions(),
                    experimental_capabilities={},
                ),
            ),
        )


if __name__ == "__main__":
    import asyncio

    asyncio.run(main())
