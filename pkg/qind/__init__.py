"""
Quality indicator for research data and research software publications.

The package rates a publication against a maturity rubric (POCME for data,
FAIR-ST for software), aggregates the ratings per dimension and renders the
result as JSON, Markdown and radar-plot SVG.
"""

__version__ = "1.0.0"

TOOL_NAME = "qind"
