"""Common output type for the asymptotic evaluators."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExpansionResult:
    """Value of a truncated expansion together with its per-term breakdown.

    ``terms`` holds the dimensionless series terms (term 0 is 1 for every
    expansion in this package); ``value = prefactor * sum(terms)`` and
    ``last_term_ratio = |terms[-1]| / |sum(terms)|`` gives a cheap
    truncation diagnostic.
    """

    value: complex
    terms: list[complex]
    truncation_index: int
    last_term_ratio: float
    prefactor: complex

    def __post_init__(self):
        if len(self.terms) != self.truncation_index + 1:
            raise ValueError("terms list must have truncation_index + 1 entries")


def make_result(prefactor: complex, terms: list[complex]) -> ExpansionResult:
    total = sum(terms)
    ratio = abs(terms[-1]) / abs(total) if total != 0 else float("inf")
    return ExpansionResult(
        value=prefactor * total,
        terms=list(terms),
        truncation_index=len(terms) - 1,
        last_term_ratio=ratio,
        prefactor=prefactor,
    )
