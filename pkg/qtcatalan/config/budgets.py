"""
Budget Configuration
Per-definition size limits; requests beyond a budget are reported as skipped
"""
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Dict, Optional, Union

from dotenv import dotenv_values

logger = logging.getLogger(__name__)


@dataclass
class BudgetConfig:
    """Largest n each computation may be asked for"""

    # Enumerative definitions (apply for m <= max_m)
    pc_max_n: int = 16
    wc_max_n: int = 16
    dc_max_n: int = 16
    max_m: int = 3

    # Interpolated rational-function sum
    rc_max_n: int = 6

    # Rank computations for AC, by m
    ac_max_n_m1: int = 5
    ac_max_n_m2: int = 4
    ac_max_n_m3: int = 3

    limit_max_n: int = 16
    phi_max_n: int = 5
    full_model_max_n: int = 4  # monomial-basis rank model
    lemma_max_n: int = 5

    @classmethod
    def from_dict(cls, data: Dict[str, str]) -> 'BudgetConfig':
        """Create config from a key-value mapping; keys may be upper or lower case"""
        known = {f.name for f in fields(cls)}
        values = {}
        for key, raw in data.items():
            name = key.strip().lower()
            if name not in known:
                logger.warning(f"Ignoring unknown budget key: {key}")
                continue
            try:
                values[name] = int(raw)
            except (TypeError, ValueError):
                logger.warning(f"Ignoring non-integer budget value {key}={raw!r}")
        return cls(**values)

    @classmethod
    def from_file(cls, path: Optional[Union[str, Path]]) -> 'BudgetConfig':
        """Load a KEY=VALUE budget file; a missing path yields the defaults"""
        if path is None:
            return cls()
        path = Path(path)
        if not path.exists():
            logger.warning(f"Budget file {path} not found, using defaults")
            return cls()
        logger.info(f"Loading budgets from {path}")
        return cls.from_dict(dotenv_values(path))

    def max_n(self, verb: str, m: int = 1) -> int:
        """Largest admissible n for a verb at slope m (0 means never)"""
        if verb in ('pc', 'wc', 'dc'):
            return getattr(self, f"{verb}_max_n") if m <= self.max_m else 0
        if verb == 'ac':
            return {1: self.ac_max_n_m1, 2: self.ac_max_n_m2, 3: self.ac_max_n_m3}.get(m, 0)
        if verb == 'rc':
            return self.rc_max_n if m <= self.max_m else 0
        if verb in ('limit', 'phi', 'lemma', 'full_model'):
            return getattr(self, f"{verb}_max_n")
        raise ValueError(f"Unknown budget verb: {verb}")

    def allows(self, verb: str, m: int, n: int) -> bool:
        allowed = n <= self.max_n(verb, m)
        if not allowed:
            logger.warning(f"Budget exceeded: {verb} with m={m}, n={n} (limit {self.max_n(verb, m)})")
        return allowed
