"""Tagged console logging and progress bars."""

import os
import sys
from typing import Iterable, Optional, TypeVar

from dotenv import load_dotenv
from tqdm import tqdm

load_dotenv()

T = TypeVar('T')

_verbose: bool = os.environ.get("DNLIFT_VERBOSE", "").strip().lower() in ("1", "true", "yes", "on")


def set_verbose(flag: bool) -> None:
    global _verbose
    _verbose = bool(flag)


def is_verbose() -> bool:
    return _verbose


def log(tag: str, message: str, force: bool = False) -> None:
    """Write '[tag] message' to stderr when verbose (or forced)."""
    if _verbose or force:
        tqdm.write(f"[{tag}] {message}", file=sys.stderr)


def progress(iterable: Iterable[T], desc: str, total: Optional[int] = None) -> Iterable[T]:
    return tqdm(iterable, desc=desc, total=total, disable=not _verbose,
                file=sys.stderr, leave=False)
