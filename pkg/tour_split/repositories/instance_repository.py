"""
Instance repository - reads and writes instance and tour files.
"""
import json
import math
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from tour_split.core.exceptions import ParseException
from tour_split.core.logging import get_logger
from tour_split.models.instance import Instance, Tour
from tour_split.schemas.instance import (
    CustomerRecord,
    DepotRecord,
    InstanceFile,
    InstanceMeta,
)

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _finite_or_none(value: float) -> Optional[float]:
    return None if math.isinf(value) else float(value)


def _inf_if_none(value: Optional[float]) -> float:
    return math.inf if value is None else float(value)


def _matrix(rows) -> Optional[tuple]:
    if rows is None:
        return None
    return tuple(tuple(float(v) for v in row) for row in rows)


class InstanceRepository:
    """JSON instance documents and one-line tour files."""

    # ── Conversion ──────────────────────────────────────────────────

    @staticmethod
    def to_document(instance: Instance) -> InstanceFile:
        coords = instance.coords
        customers = []
        for k in range(instance.n):
            record = CustomerRecord(
                d=instance.demands[k],
                p=instance.pickups[k],
                a=instance.opens[k],
                b=_finite_or_none(instance.closes[k]),
                s=instance.service[k],
                x=coords[k + 1][0] if coords else None,
                y=coords[k + 1][1] if coords else None,
            )
            customers.append(record)
        meta = dict(instance.meta)
        return InstanceFile(
            n=instance.n,
            q=_finite_or_none(instance.q),
            t_horizon=_finite_or_none(instance.horizon),
            rounding=instance.rounding,
            depot=DepotRecord(x=coords[0][0], y=coords[0][1]) if coords else None,
            customers=customers,
            cost_matrix=[list(row) for row in instance.cost_matrix] if instance.cost_matrix else None,
            time_matrix=[list(row) for row in instance.time_matrix] if instance.time_matrix else None,
            meta=InstanceMeta(
                seed=meta.pop("seed", None),
                generator_params=meta.pop("generator_params", meta),
            ),
        )

    @staticmethod
    def from_document(doc: InstanceFile) -> Instance:
        coords = None
        if doc.depot is not None:
            coords = ((doc.depot.x, doc.depot.y),) + tuple(
                (float(c.x), float(c.y)) for c in doc.customers
            )
        meta = {"generator_params": doc.meta.generator_params}
        if doc.meta.seed is not None:
            meta["seed"] = doc.meta.seed
        return Instance(
            q=_inf_if_none(doc.q),
            horizon=_inf_if_none(doc.t_horizon),
            demands=tuple(c.d for c in doc.customers),
            pickups=tuple(c.p for c in doc.customers),
            opens=tuple(c.a for c in doc.customers),
            closes=tuple(_inf_if_none(c.b) for c in doc.customers),
            service=tuple(c.s for c in doc.customers),
            coords=coords,
            cost_matrix=_matrix(doc.cost_matrix),
            time_matrix=_matrix(doc.time_matrix),
            rounding=doc.rounding,
            meta=meta,
        )

    # ── Instance files ──────────────────────────────────────────────

    def load(self, path: PathLike) -> Instance:
        """
        Parse an instance file.

        Raises:
            ParseException: unreadable file, bad JSON (with line) or a field
                that fails schema validation (with its dotted path)
            InvalidInstanceException: values the schema accepts but the
                model rejects (matrix shape, for example)
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseException(f"cannot read file: {exc.strerror}", path=str(path))
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseException(exc.msg, path=str(path), line=exc.lineno)
        try:
            doc = InstanceFile.model_validate(raw)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or None
            raise ParseException(error["msg"], path=str(path), field=field)
        instance = self.from_document(doc)
        logger.debug("instance_loaded", path=str(path), n=instance.n)
        return instance

    def save(self, instance: Instance, path: PathLike) -> Path:
        path = Path(path)
        path.write_text(
            self.to_document(instance).model_dump_json(indent=2) + "\n", encoding="utf-8"
        )
        logger.debug("instance_saved", path=str(path), n=instance.n)
        return path

    # ── Tour files ──────────────────────────────────────────────────

    def load_tour(self, path: PathLike) -> Tour:
        """
        Read a whitespace-separated permutation (one line).

        Raises:
            ParseException: a token that is not an integer, or extra lines
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseException(f"cannot read file: {exc.strerror}", path=str(path))
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) > 1:
            raise ParseException("tour must be on a single line", path=str(path), line=2)
        order = []
        for position, token in enumerate(lines[0].split() if lines else [], start=1):
            try:
                order.append(int(token))
            except ValueError:
                raise ParseException(
                    f"'{token}' is not a customer label",
                    path=str(path),
                    line=1,
                    field=f"position {position}",
                )
        return Tour(tuple(order))

    def save_tour(self, tour: Tour, path: PathLike) -> Path:
        path = Path(path)
        path.write_text(" ".join(str(label) for label in tour.order) + "\n", encoding="utf-8")
        return path
