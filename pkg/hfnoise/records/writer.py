"""Generic persistence of result records.

This module provides a generic writer that stores lists of pydantic
records as JSON arrays or CSV tables and reads JSON files back into typed
records.
"""

import json
from pathlib import Path
from typing import Generic, List, Literal, Sequence, Type, TypeVar, Union

import pandas as pd
from pydantic import BaseModel, TypeAdapter

from hfnoise.utils.logger import Logger

T = TypeVar("T", bound=BaseModel)

OutputFormat = Literal["json", "csv"]

logger = Logger().get_logger()


class RecordWriter(Generic[T]):
    """Writes and reads records of one pydantic model.

    Type Parameters
    ---------------
    T : TypeVar
        Type variable bound to BaseModel, the record model.

    Attributes
    ----------
    path : Path
        Target file.
    model_class : Type[T]
        Record model used when reading back.

    Examples
    --------
    >>> writer = RecordWriter("out/moments.json", MomentRecord)
    >>> writer.write(records)
    >>> writer.read()
    """

    def __init__(self, path: Union[str, Path], model_class: Type[T]):
        """Initialize the writer with a target file and a record model.

        Parameters
        ----------
        path : str or Path
            Target file; parent directories are created on write.
        model_class : Type[T]
            Pydantic model of the records.
        """
        self.path = Path(path)
        self.model_class = model_class

    def write(self, records: Sequence[T], fmt: OutputFormat = "json") -> Path:
        """Write ``records`` as a JSON array or a CSV table.

        Returns
        -------
        Path
            The written file.
        """
        self.path.parent.mkdir(parents=True, exist_ok=True)
        rows = [record.model_dump(mode="json") for record in records]
        if fmt == "json":
            self.path.write_text(json.dumps(rows, indent=2))
        elif fmt == "csv":
            columns = list(self.model_class.model_fields)
            pd.DataFrame(rows, columns=columns).to_csv(
                self.path, index=False, float_format="%.17g"
            )
        else:
            message = f"unknown output format {fmt!r}"
            logger.error(message)
            raise ValueError(message)
        name = self.model_class.__name__
        logger.info(f"Wrote {len(rows)} {name} records to {self.path}")
        return self.path

    def read(self) -> List[T]:
        """Read records back from a JSON file written by :meth:`write`."""
        if not self.path.exists():
            message = f"File not found: {self.path}"
            logger.error(message)
            raise FileNotFoundError(message)
        adapter = TypeAdapter(List[self.model_class])  # type: ignore[name-defined]
        return adapter.validate_json(self.path.read_text())
