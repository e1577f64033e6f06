"""Process-wide cache of built algebras, optionally backed by table files."""

from pathlib import Path
from threading import Lock
from typing import Dict, List, Optional, Union

from config import log
from rootsys import RootSystem, SimpleType, algebra_dimension, build_root_system

from .algebra import AlgebraError, LieAlgebra, build_algebra
from .checks import verify_serre
from .serialize import TableFormatError, read_table, write_table


class AlgebraRegistry:
    """Global registry of root systems and Chevalley algebras by type name.

    With a cache directory configured, tables are read from
    `<cache_dir>/<type>.table` when present and written after a fresh build.
    """

    _lock = Lock()
    _root_systems: Dict[str, RootSystem] = {}
    _algebras: Dict[str, LieAlgebra] = {}
    _cache_dir: Optional[Path] = None

    @classmethod
    def configure(cls, cache_dir: Optional[Union[str, Path]]) -> None:
        with cls._lock:
            cls._cache_dir = Path(cache_dir) if cache_dir else None
            if cls._cache_dir:
                log("registry", f"Structure-table cache at {cls._cache_dir}")

    @classmethod
    def root_system(cls, name: Union[str, SimpleType]) -> RootSystem:
        t = name if isinstance(name, SimpleType) else SimpleType.parse(name)
        key = str(t)
        with cls._lock:
            if key not in cls._root_systems:
                cls._root_systems[key] = build_root_system(t)
            return cls._root_systems[key]

    @classmethod
    def get(cls, name: Union[str, SimpleType]) -> LieAlgebra:
        rs = cls.root_system(name)
        key = str(rs.type)
        with cls._lock:
            cached = cls._algebras.get(key)
            if cached is not None:
                return cached
            algebra = cls._load_or_build(rs)
            cls._algebras[key] = algebra
            return algebra

    @classmethod
    def _load_cached(cls, path: Path, rs: RootSystem) -> LieAlgebra:
        """A cached table, trusted only if it matches rs and passes the Serre relations."""
        algebra = read_table(path, rs)
        expected = algebra_dimension(rs.type)
        if algebra.name != str(rs.type) or algebra.dim != expected:
            raise TableFormatError(f"{path} holds {algebra.name} of dim {algebra.dim}, "
                                   f"expected {rs.type} of dim {expected}")
        report = verify_serre(algebra)
        if not report.passed:
            raise TableFormatError(f"{path} fails {len(report.failures)} Chevalley-Serre relations")
        return algebra

    @classmethod
    def _load_or_build(cls, rs: RootSystem) -> LieAlgebra:
        path = cls._cache_dir / f"{rs.type}.table" if cls._cache_dir else None
        if path is not None and path.exists():
            try:
                algebra = cls._load_cached(path, rs)
                log("registry", f"Loaded {rs.type} from {path}")
                return algebra
            except AlgebraError as e:
                log("registry", f"Ignoring cache file {path}: {e}", force=True)
        log("build", f"Building {rs.type} structure table")
        algebra = build_algebra(rs)
        if path is not None:
            write_table(algebra, path)
            log("registry", f"Wrote {path}")
        return algebra

    @classmethod
    def list_algebras(cls) -> List[str]:
        return sorted(cls._algebras)

    @classmethod
    def clear(cls) -> None:
        with cls._lock:
            cls._root_systems.clear()
            cls._algebras.clear()
