"""
Report Template Loading Utility

Text reports are jinja2 templates kept under utils/report_templates/. A
loaded template is cached together with its file modification time and
reloaded when the file changes.

Usage:
    from utils.report_loader import render_report

    text = render_report("cells", report=dump)
"""

import logging
import os
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, StrictUndefined, Template

from algebra.ring import LaurentPoly

logger = logging.getLogger(__name__)

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "report_templates")
TEMPLATE_SUFFIX = ".txt"

# name -> {"template", "mtime", "file_path"}
_template_cache: Dict[str, Dict[str, Any]] = {}


def format_parts(parts: Optional[Sequence[int]]) -> str:
    return "(" + ",".join(str(p) for p in (parts or ())) + ")"


def format_poly(terms: List[List[int]]) -> str:
    return str(LaurentPoly.from_json(terms))


def format_permutation(images: Sequence[int]) -> str:
    return "[" + ",".join(str(i) for i in images) + "]"


def _environment() -> Environment:
    env = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True, undefined=StrictUndefined)
    env.filters["parts"] = format_parts
    env.filters["poly"] = format_poly
    env.filters["perm"] = format_permutation
    return env


_env = _environment()


def load_template(name: str) -> Template:
    """
    Load a report template by name, reusing the cached copy while the file is unchanged.

    Raises:
        FileNotFoundError: If no template of that name exists
    """
    file_path = os.path.join(TEMPLATE_DIR, f"{name}{TEMPLATE_SUFFIX}")
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Report template not found: {name}")
    mtime = os.path.getmtime(file_path)

    cached = _template_cache.get(name)
    if cached and cached["mtime"] >= mtime:
        return cached["template"]

    with open(file_path, "r", encoding="utf-8") as f:
        template = _env.from_string(f.read())
    _template_cache[name] = {"template": template, "mtime": mtime, "file_path": file_path}
    logger.debug(f"loaded report template {name}")
    return template


def render_report(name: str, **context: Any) -> str:
    return load_template(name).render(**context)
