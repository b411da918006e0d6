import logging
from pathlib import Path

from pydantic import BaseModel, ValidationError


class ModelFileError(RuntimeError):
    pass


class ModelFile[T: BaseModel]:
    """JSON file holding one pydantic document: models, instances, sequents, certificates, configuration."""

    def __init__(self, model_type: type[T], file: Path, logger: logging.Logger) -> None:
        self.model_type = model_type
        self._file = file
        self._logger = logger.getChild(self.__class__.__name__)

    @property
    def file(self) -> Path:
        return self._file

    def exists(self) -> bool:
        return self._file.exists()

    def load(self) -> T:
        self._logger.debug("Loading %s from %s", self.model_type.__name__, self._file)
        try:
            text = self._file.read_text(encoding="utf-8")
        except OSError as e:
            msg = f"Failed to read {self._file}"
            raise ModelFileError(msg) from e

        try:
            model = self.model_type.model_validate_json(text)
        except ValidationError as e:
            msg = f"Invalid {self.model_type.__name__} in {self._file}: {e.error_count()} error(s)"
            raise ModelFileError(msg) from e

        self._logger.debug("Loaded data: %s", model)
        return model

    def load_or_none(self) -> T | None:
        """Like `load`, but a missing file gives None."""
        if not self.exists():
            self._logger.debug("Data file not found: %s", self._file)
            return None
        return self.load()

    def save(self, data: T) -> None:
        self._logger.debug("Saving data to %s", self._file)
        try:
            self._file.write_text(data.model_dump_json(indent=4) + "\n", encoding="utf-8")
        except (OSError, TypeError) as e:
            msg = f"Failed to save data to {self._file!s}"
            self._logger.exception(msg)
            raise ModelFileError(msg) from e
