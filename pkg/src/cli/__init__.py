from .config import RunConfig, WorkbenchConfig
from .main import main, run_config
from .parser import build_parser
from .render import Renderer

__all__ = ["Renderer", "RunConfig", "WorkbenchConfig", "build_parser", "main", "run_config"]
