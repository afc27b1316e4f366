# src/cuspidal/table.py
"""
The cuspidal classification table and the lookup of c_I.

Records are keyed by the Levi signature (sorted factor labels joined by '+'),
the center invariants and optionally the ambient type. A lookup tries, in
order: a record scoped to the ambient type (exact center, then '*'), a
wildcard record (exact center, then '*'), then the fallback rules the table
enables: the A-type rule for signatures made only of type-A factors and the
per-factor rules for the rest. A face no record or rule covers fails loudly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import ValidationError

from config.schemas import CuspidalRecordModel, CuspidalRule, CuspidalTableModel, RecordStatus
from config.settings import CUSPIDAL_TABLE_FILE
from src.algebra.root_system import AffineRootData
from src.coxeter.faces import AlcoveFace
from src.cuspidal.center import CenterData, a_type_count, center_data
from src.cuspidal.rules import factor_rule_count
from src.utils.config_loader import load_cuspidal_config
from src.utils.errors import CuspidalTableError, UnclassifiedCuspidalError
from src.utils.logger_config import get_face_logger

logger = logging.getLogger(__name__)

WILDCARD = "*"


@dataclass(frozen=True)
class CuspidalTable:
    version: int
    records: tuple[CuspidalRecordModel, ...]
    origin: str = "shipped"
    rules: tuple[CuspidalRule, ...] = (CuspidalRule.A_TYPE, CuspidalRule.FACTOR)

    def find(self, signature: str, center_key: str, ambient: str) -> Optional[CuspidalRecordModel]:
        for scope in (ambient, WILDCARD):
            for center in (center_key, WILDCARD):
                for record in self.records:
                    if record.type == signature and record.ambient == scope and record.center == center:
                        return record
        return None


@dataclass(frozen=True)
class CuspidalAssignment:
    """c_I for one face together with how it was obtained."""
    face: AlcoveFace
    count: int
    rule: str  # 'torus', 'table', 'a-type-rule' or 'factor-rule'
    center: CenterData
    record: Optional[CuspidalRecordModel] = None


def _parse_text_records(text: str, origin: str) -> CuspidalTableModel:
    records = []
    version = 1
    rules = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("version"):
            try:
                version = int(line.split("=", 1)[1])
            except (IndexError, ValueError) as e:
                raise CuspidalTableError(f"{origin}:{number}: bad version line {line!r}") from e
            continue
        if line.lower().startswith("rules") and "=" in line and ";" not in line:
            rules = [r.strip() for r in line.split("=", 1)[1].split(",") if r.strip()]
            continue
        fields = {}
        for part in line.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise CuspidalTableError(f"{origin}:{number}: expected key=value, got {part!r}")
            key, value = (s.strip() for s in part.split("=", 1))
            if key in fields:
                raise CuspidalTableError(f"{origin}:{number}: duplicate field {key!r}")
            fields[key] = value
        records.append(_validate_record(fields, f"{origin}:{number}"))
    try:
        if rules is None:
            return CuspidalTableModel(version=version, records=records)
        return CuspidalTableModel(version=version, records=records, rules=rules)
    except ValidationError as e:
        raise CuspidalTableError(f"{origin}: {e.errors()[0]['msg']}") from e


def _validate_record(fields: dict, where: str) -> CuspidalRecordModel:
    unknown = set(fields) - set(CuspidalRecordModel.model_fields)
    if unknown:
        raise CuspidalTableError(f"{where}: unknown fields {sorted(unknown)}")
    try:
        return CuspidalRecordModel.model_validate(fields)
    except ValidationError as e:
        raise CuspidalTableError(f"{where}: {e.errors()[0]['msg']} in {fields}") from e


def load_cuspidal_table(path: Optional[Union[str, Path]] = None) -> CuspidalTable:
    """
    Load the shipped table, or the file at `path`.

    A '.yml'/'.yaml' suffix selects YAML; anything else is read with the
    text record grammar.
    """
    if path is None:
        data = load_cuspidal_config(CUSPIDAL_TABLE_FILE)
        origin = CUSPIDAL_TABLE_FILE
    else:
        file = Path(path)
        if not file.exists():
            raise FileNotFoundError(f"Cuspidal table not found: {file}")
        origin = str(file)
        if file.suffix.lower() not in (".yml", ".yaml"):
            model = _parse_text_records(file.read_text(encoding="utf-8"), origin)
            return _build_table(model, origin)
        with open(file, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    if not isinstance(data, dict) or "records" not in data:
        raise CuspidalTableError(f"{origin}: expected a mapping with 'version' and 'records'")
    records = [_validate_record(dict(r), f"{origin} record {k}") for k, r in enumerate(data["records"])]
    try:
        extra = {"rules": data["rules"]} if "rules" in data else {}
        model = CuspidalTableModel(version=data.get("version", 1), records=records, **extra)
    except ValidationError as e:
        raise CuspidalTableError(f"{origin}: {e.errors()[0]['msg']}") from e
    return _build_table(model, origin)


def _build_table(model: CuspidalTableModel, origin: str) -> CuspidalTable:
    seen = set()
    for record in model.records:
        key = (record.type, record.center, record.ambient)
        if key in seen:
            raise CuspidalTableError(f"{origin}: duplicate record for {key}")
        seen.add(key)
    rules = tuple(dict.fromkeys(model.rules))
    logger.info(
        f"Loaded cuspidal table {origin} (version {model.version}, {len(model.records)} records, "
        f"rules {[r.value for r in rules]})"
    )
    return CuspidalTable(model.version, tuple(model.records), origin, rules)


def cuspidal_count(face: AlcoveFace, affine: AffineRootData, table: CuspidalTable) -> CuspidalAssignment:
    """
    c_I for a face. The empty face (the torus) always gets 1.

    Raises UnclassifiedCuspidalError naming the signature and center when no
    record or rule covers the face.
    """
    face_log = get_face_logger(face.type_label, face.label, "engine.cuspidal")
    center = center_data(face, affine)
    if not face.nodes:
        return CuspidalAssignment(face, 1, "torus", center)

    signature = face.signature
    record = table.find(signature, center.key, face.type_label)
    if record is not None:
        if record.status == RecordStatus.EXTENDED:
            face_log.warning(f"{signature} uses an extended table entry ({record.source}), unverified here")
        face_log.debug(f"{signature} center {center.key}: {record.chars} from table ({record.source})")
        return CuspidalAssignment(face, record.chars, "table", center, record)

    if CuspidalRule.A_TYPE in table.rules and all(f.is_type_a for f in face.factors):
        count = a_type_count(center)
        face_log.debug(f"{signature} center {center.key}: {count} by the A-type rule")
        return CuspidalAssignment(face, count, "a-type-rule", center)

    if CuspidalRule.FACTOR in table.rules:
        count = factor_rule_count(center, affine)
        if count is not None:
            face_log.warning(f"{signature} center {center.key}: {count} by the per-factor rules, unverified here")
            return CuspidalAssignment(face, count, "factor-rule", center)

    raise UnclassifiedCuspidalError(f"{signature} (center {center.key}, ambient {face.type_label})", face.label)
