"""
Report repository - benchmark CSV and speedup series.

Numbers are written with repr(), which never depends on the locale and
reads back to the same float.
"""
import csv
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from pydantic import ValidationError

from tour_split.core.exceptions import ParseException
from tour_split.core.logging import get_logger
from tour_split.schemas.bench import REPORT_COLUMNS, SPEEDUP_COLUMNS, BenchRow, SpeedupRow

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _format(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


class ReportRepository:
    """Strict CSV reader/writer for BenchReport and speedup files."""

    def _write(self, path: PathLike, columns: Sequence[str], records: Iterable[dict]) -> Path:
        path = Path(path)
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(columns)
            count = 0
            for record in records:
                writer.writerow([_format(record[column]) for column in columns])
                count += 1
        logger.info("report_written", path=str(path), rows=count)
        return path

    def write_report(self, rows: Iterable[BenchRow], path: PathLike) -> Path:
        return self._write(path, REPORT_COLUMNS, (row.csv_record() for row in rows))

    def write_speedups(self, rows: Iterable[SpeedupRow], path: PathLike) -> Path:
        return self._write(path, SPEEDUP_COLUMNS, (row.model_dump() for row in rows))

    def read_report(self, path: PathLike) -> List[BenchRow]:
        """
        Raises:
            ParseException: header differs from the report format, or a row
                with a missing or non-numeric value (line and column given)
        """
        path = Path(path)
        try:
            fh = path.open("r", encoding="utf-8", newline="")
        except OSError as exc:
            raise ParseException(f"cannot read file: {exc.strerror}", path=str(path))
        rows: List[BenchRow] = []
        with fh:
            reader = csv.reader(fh, strict=True)
            try:
                header = next(reader, None)
                if header is None or tuple(header) != REPORT_COLUMNS:
                    raise ParseException("unexpected header", path=str(path), line=1)
                for record in reader:
                    line = reader.line_num
                    if len(record) != len(REPORT_COLUMNS):
                        raise ParseException(
                            f"expected {len(REPORT_COLUMNS)} fields, got {len(record)}",
                            path=str(path),
                            line=line,
                        )
                    try:
                        rows.append(BenchRow.model_validate(dict(zip(REPORT_COLUMNS, record))))
                    except ValidationError as exc:
                        error = exc.errors()[0]
                        raise ParseException(
                            error["msg"],
                            path=str(path),
                            line=line,
                            field=str(error["loc"][0]) if error["loc"] else None,
                        )
            except csv.Error as exc:
                raise ParseException(str(exc), path=str(path), line=reader.line_num)
        return rows
