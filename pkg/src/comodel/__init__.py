"""comodel: an agentic 3D co-modeling studio.

A headless scene engine with procedural primitives, a line-oriented
command DSL, an MCP-style tool server, a deterministic software
rasterizer, a planner/actor/critic session loop with human-in-the-loop
steering, geometric quality metrics, and a WebSocket scene-sync hub.
"""

__version__ = "0.1.0"
