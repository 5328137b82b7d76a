"""Machine-readable verdicts returned by the property checkers."""

from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from src.errors import InvariantViolation


@dataclass
class PropertyReport:
    """Verdict for one property of one function.

    A false verdict always carries a witness: the first failing point u
    (and, for decimation scans, the smallest failing exponent i).
    """

    property: str
    verdict: bool
    n: int
    k: int
    witness: Optional[dict] = None
    certificate: dict = field(default_factory=dict)
    detail: str = ""

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise InvariantViolation(f"{self.property}: a failing report needs a witness")

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def summary(self) -> str:
        verdict = "PASS" if self.verdict else "FAIL"
        line = f"{self.property} (n={self.n}, k={self.k}): {verdict}"
        if self.witness:
            line += f" witness={self.witness}"
        if self.detail:
            line += f" - {self.detail}"
        return line
