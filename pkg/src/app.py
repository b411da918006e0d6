from __future__ import annotations

import logging
import sys

from rich.console import Console
from rich.logging import RichHandler

from cli import main

logger = logging.getLogger("Workbench")


if __name__ == "__main__":
    handler = RichHandler(
        console=Console(stderr=True),
        rich_tracebacks=True,
        log_time_format="%H:%M:%S",
        show_path=__debug__,
        enable_link_path=__debug__,
    )
    handler.setFormatter(logging.Formatter("%(name)-22s - %(message)s"))
    logger.addHandler(handler)

    sys.exit(main())
