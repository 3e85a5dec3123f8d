"""
Pydantic schemas for reports, cached results and polynomial wire forms
"""
import hashlib
import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

Verdict = Literal['pass', 'fail', 'skipped']


def canonical_json(payload: Any) -> str:
    """Sorted keys, no whitespace; the form every content hash is taken over"""
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


def content_hash(payload: Any) -> str:
    return hashlib.sha256(canonical_json(payload).encode('utf-8')).hexdigest()


class QtTerm(BaseModel):
    """One coefficient of a q,t-polynomial; c is a decimal string"""
    q: int
    t: int
    c: str


class RhoTerm(BaseModel):
    """One coefficient of a rho-polynomial"""
    nu: List[int]
    c: int


class CheckReport(BaseModel):
    """Outcome of one check; a fail verdict always carries a witness"""
    check: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    verdict: Verdict
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)
    seed: Optional[int] = None
    wall_time: float = 0.0
    message: str = ''

    @property
    def failed(self) -> bool:
        return self.verdict == 'fail'

    def summary(self) -> str:
        params = ", ".join(f"{key}={value}" for key, value in sorted(self.parameters.items()))
        line = f"[{self.verdict.upper():7}] {self.check}({params}) {self.wall_time:.2f}s"
        if self.message:
            line += f" - {self.message}"
        return line


class CacheEntry(BaseModel):
    """One stored result: the payload and the SHA-256 of its canonical JSON"""
    verb: str
    params: str
    sha256: str
    payload: Any

    def is_intact(self) -> bool:
        return content_hash(self.payload) == self.sha256
