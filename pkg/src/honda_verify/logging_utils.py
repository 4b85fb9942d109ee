import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


def configure_logging(log_file: Path, level: int = logging.INFO) -> None:
    """Send log records at ``level`` and above to ``log_file``."""
    log_file = Path(log_file)
    if not log_file.parent.exists():
        log_file.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(str(log_file), encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger()
    root.setLevel(level)
    root.addHandler(handler)


@contextmanager
def timed(label: str) -> Iterator[Dict[str, float]]:
    """Log how long the enclosed block took; the elapsed time lands in ``ms``."""
    record: Dict[str, float] = {}
    start = time.perf_counter()
    logging.debug("%s: started", label)
    try:
        yield record
    finally:
        record["ms"] = (time.perf_counter() - start) * 1000.0
        logging.debug("%s: finished in %.1f ms", label, record["ms"])


__all__ = ["configure_logging", "timed", "LOG_FORMAT"]
