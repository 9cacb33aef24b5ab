"""
Reports
=======

Machine-readable results of the ktotal commands. Exact values travel as
strings (``p/q``, integers, ``+inf``, ``-inf``) so that they round-trip
losslessly through JSON.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from .lasso import ExtendedValue


def _exact(value: str) -> str:
    ExtendedValue.parse(value)
    return value


class Report(BaseModel):
    command: str
    k: Optional[int] = None
    elapsed_seconds: float = 0.0

    def render(self) -> str:
        raise NotImplementedError


class EvalReport(Report):
    command: str = "eval"
    prefix: List[str]
    cycle: List[str]
    classification: str
    value: str

    @field_validator("value")
    @classmethod
    def check_value(cls, value: str) -> str:
        return _exact(value)

    def render(self) -> str:
        result = f"Lasso: ({','.join(self.prefix)})({','.join(self.cycle)})\n"
        result += f"k: {self.k}\n"
        result += f"Classification: {self.classification}\n"
        result += f"Value: {self.value}\n"
        return result


class ViolationEntry(BaseModel):
    vertex: str
    side: str
    strategy: List[str]
    value: str
    expected: str

    @field_validator("value", "expected")
    @classmethod
    def check_value(cls, value: str) -> str:
        return _exact(value)


class SaddleVerdict(BaseModel):
    ok: bool
    violations: List[ViolationEntry] = Field(default_factory=list)

    def render(self) -> str:
        if self.ok:
            return "Saddle check: ok\n"
        result = f"Saddle check: {len(self.violations)} violations\n"
        for v in self.violations:
            result += (
                f"  - at {v.vertex}: {v.side} deviates to "
                f"[{'; '.join(v.strategy)}] and gets {v.value} (saddle value {v.expected})\n"
            )
        return result


class SolveReport(Report):
    command: str = "solve"
    method: str
    values: Dict[str, str]
    strategy: List[str]
    beta: Optional[str] = None
    scale: int = 1
    minmax_agrees: Optional[bool] = None
    saddle: Optional[SaddleVerdict] = None

    @field_validator("values")
    @classmethod
    def check_values(cls, values: Dict[str, str]) -> Dict[str, str]:
        for v in values.values():
            _exact(v)
        return values

    def render(self) -> str:
        result = f"Solved k={self.k} by {self.method}"
        if self.scale != 1:
            result += f" (rewards scaled by {self.scale})"
        result += "\n\nValues:\n"
        for vertex, value in self.values.items():
            result += f"  {vertex}: {value}\n"
        result += "\nStrategy:\n"
        for arc in self.strategy:
            result += f"  {arc}\n"
        if self.saddle is not None:
            result += "\n" + self.saddle.render()
        return result


class SplitReport(Report):
    command: str = "split"
    vertices: int
    arcs: int
    game: str

    def render(self) -> str:
        return self.game


class CheckReport(Report):
    command: str = "check"
    values: Dict[str, str]
    saddle: SaddleVerdict

    @field_validator("values")
    @classmethod
    def check_values(cls, values: Dict[str, str]) -> Dict[str, str]:
        for v in values.values():
            _exact(v)
        return values

    def render(self) -> str:
        result = f"Strategy values for k={self.k}:\n"
        for vertex, value in self.values.items():
            result += f"  {vertex}: {value}\n"
        return result + "\n" + self.saddle.render()


class LassoEntry(BaseModel):
    p: int
    q: int
    prefix: List[int]
    cycle: List[int]


class DecomposeReport(Report):
    command: str = "decompose"
    length: int
    lassos: List[LassoEntry]
    residual: List[int]
    direct: str
    expanded: str
    equal: bool

    def render(self) -> str:
        result = f"Walk of length {self.length}, {len(self.lassos)} lassos\n"
        for i, lasso in enumerate(self.lassos, 1):
            result += f"  {i}. p={lasso.p} q={lasso.q} path={lasso.prefix} cycle={lasso.cycle}\n"
        result += f"Residual path: {self.residual}\n"
        result += f"S(M^{self.k}(a)) directly: {self.direct}\n"
        result += f"S(M^{self.k}(a)) by decomposition: {self.expanded}\n"
        result += f"Equal: {self.equal}\n"
        return result
