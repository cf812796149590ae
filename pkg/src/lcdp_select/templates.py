"""Industry weight templates: built-in sector patterns plus user-defined vectors.

The three built-ins are code constants so their values cannot drift; each
carries a provenance note reminding users they capture recurring sector
trends, not prescriptions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ValidationError
from .model import CriterionId, WeightVector, canonical_json

_TREND_NOTE = ("Recurring weighting trend observed across {sector} evaluations; "
               "indicative starting point, not a prescription.")


@dataclass(frozen=True)
class IndustryTemplate:
    sector: str
    display_name: str
    weights: WeightVector
    provenance: str

    def as_dict(self) -> dict[str, Any]:
        return {"sector": self.sector, "display_name": self.display_name,
                "weights": self.weights.as_dict(), "provenance": self.provenance}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "IndustryTemplate":
        return cls(sector=str(data["sector"]), display_name=str(data["display_name"]),
                   weights=WeightVector.from_dict(data["weights"]),
                   provenance=str(data.get("provenance", "")))


BUILT_IN_TEMPLATES: tuple[IndustryTemplate, ...] = (
    IndustryTemplate(
        sector="financial_services",
        display_name="Financial Services",
        weights=WeightVector({
            CriterionId.BPO: 0.20, CriterionId.UCF: 0.13, CriterionId.II: 0.24,
            CriterionId.GS: 0.28, CriterionId.AEA: 0.15,
        }),
        provenance=_TREND_NOTE.format(sector="financial services"),
    ),
    IndustryTemplate(
        sector="manufacturing",
        display_name="Manufacturing",
        weights=WeightVector({
            CriterionId.BPO: 0.24, CriterionId.UCF: 0.13, CriterionId.II: 0.26,
            CriterionId.GS: 0.19, CriterionId.AEA: 0.18,
        }),
        provenance=_TREND_NOTE.format(sector="manufacturing"),
    ),
    IndustryTemplate(
        sector="pharma",
        display_name="Pharma",
        weights=WeightVector({
            CriterionId.BPO: 0.22, CriterionId.UCF: 0.12, CriterionId.II: 0.21,
            CriterionId.GS: 0.30, CriterionId.AEA: 0.15,
        }),
        provenance=_TREND_NOTE.format(sector="pharma"),
    ),
)

_BUILT_IN_BY_SECTOR = {t.sector: t for t in BUILT_IN_TEMPLATES}


def get_template(sector: str) -> IndustryTemplate:
    """Look up a built-in template; unknown sectors list the available keys."""
    try:
        return _BUILT_IN_BY_SECTOR[sector]
    except KeyError:
        known = ", ".join(sorted(_BUILT_IN_BY_SECTOR))
        raise ValidationError(f"unknown template sector '{sector}' (built-ins: {known})") from None


class TemplateRegistry:
    """Built-ins plus user templates, optionally persisted as a JSON file."""

    def __init__(self, path: Path | None = None):
        self._path = Path(path) if path is not None else None
        self._user: dict[str, IndustryTemplate] = {}
        if self._path is not None and self._path.exists():
            raw = json.loads(self._path.read_text(encoding="utf-8"))
            for item in raw.get("templates", []):
                template = IndustryTemplate.from_dict(item)
                self._user[template.sector] = template

    def get(self, sector: str) -> IndustryTemplate:
        if sector in _BUILT_IN_BY_SECTOR:
            return _BUILT_IN_BY_SECTOR[sector]
        if sector in self._user:
            return self._user[sector]
        known = ", ".join(sorted(set(_BUILT_IN_BY_SECTOR) | set(self._user)))
        raise ValidationError(f"unknown template sector '{sector}' (available: {known})")

    def list_templates(self) -> list[IndustryTemplate]:
        return list(BUILT_IN_TEMPLATES) + [self._user[k] for k in sorted(self._user)]

    def put_template(self, template: IndustryTemplate) -> str:
        if template.sector in _BUILT_IN_BY_SECTOR:
            raise ValidationError(f"cannot overwrite built-in template '{template.sector}'")
        if not template.sector:
            raise ValidationError("template sector key must be non-empty")
        template.weights.require_valid()
        self._user[template.sector] = template
        self._flush()
        return template.sector

    def _flush(self) -> None:
        if self._path is None:
            return
        body = {"templates": [self._user[k].as_dict() for k in sorted(self._user)]}
        self._path.parent.mkdir(parents=True, exist_ok=True)
        self._path.write_text(canonical_json(body) + "\n", encoding="utf-8")
