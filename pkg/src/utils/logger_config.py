import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

ENGINE_LOGGER = "engine"


class FaceTagFormatter(logging.Formatter):
    """
    A compact formatter for per-face engine output.
    It formats logs as '[type|face] message'.
    """
    def format(self, record):
        """Overrides the default format method."""
        if hasattr(record, "face_tag"):
            message = f"[{record.face_tag}] {record.getMessage()}"
        else:
            message = f"[{record.levelname}] {record.getMessage()}"
        return message


def setup_logging(log_level: Union[int, str] = logging.WARNING, log_dir: Optional[str] = None):
    """
    Set up logging for the engine.

    This configures two logging streams:
    1. The root logger for general messages (loading tables, CLI dispatch),
       which logs to stderr and, with `log_dir`, to `general.log`.
    2. A dedicated 'engine' logger for per-face computations, which uses the
       compact face-tagged format. Its console output is controlled by `log_level`.

    Args:
        log_level: Level for the console handlers, as an int or a level name.
        log_dir: Directory for rotating log files. Console only when None.
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    general_formatter = logging.Formatter("[%(levelname)s] %(name)s: %(message)s")

    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(general_formatter)
    console_handler.addFilter(lambda record: not record.name.startswith(ENGINE_LOGGER))
    root_logger.addHandler(console_handler)

    engine_logger = logging.getLogger(ENGINE_LOGGER)
    engine_logger.setLevel(logging.DEBUG)
    engine_logger.propagate = False
    engine_logger.handlers.clear()

    engine_console_handler = logging.StreamHandler()
    engine_console_handler.setLevel(log_level)
    engine_console_handler.setFormatter(FaceTagFormatter())
    engine_logger.addHandler(engine_console_handler)

    if log_dir is None:
        return

    os.makedirs(log_dir, exist_ok=True)

    file_handler = RotatingFileHandler(
        os.path.join(log_dir, "general.log"), maxBytes=5 * 1024 * 1024, backupCount=3
    )
    file_handler.setLevel(logging.INFO)
    file_handler.setFormatter(
        logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    )
    root_logger.addHandler(file_handler)

    engine_file_handler = RotatingFileHandler(
        os.path.join(log_dir, "engine_details.log"), maxBytes=10 * 1024 * 1024, backupCount=5
    )
    engine_file_handler.setLevel(logging.DEBUG)
    engine_file_handler.setFormatter(
        logging.Formatter("%(asctime)s - %(levelname)s - [%(face_tag)s] - %(name)s - %(message)s")
    )
    # Only records emitted through a face adapter carry the tag
    engine_file_handler.addFilter(lambda record: hasattr(record, "face_tag"))
    engine_logger.addHandler(engine_file_handler)


class FaceLoggerAdapter(logging.LoggerAdapter):
    """
    A logger adapter that tags every record with the type and face being processed.
    """
    def process(self, msg, kwargs):
        """Adds 'type|face' to the record's extra dict."""
        tag = f"{self.extra['type_label']}|{self.extra['face']}"
        kwargs["extra"] = {**kwargs.get("extra", {}), "face_tag": tag}
        return msg, kwargs


def get_face_logger(type_label: str, face: str, name: str = ENGINE_LOGGER) -> FaceLoggerAdapter:
    """
    Get a logger adapter for per-face engine events.

    Args:
        type_label: The canonical type label, e.g. 'B2'.
        face: The face label, e.g. 'a0,a2' or '-' for the interior.
        name: Logger name under the engine hierarchy (e.g. 'engine.coxeter').

    Returns:
        FaceLoggerAdapter: A logger adapter instance.
    """
    logger = logging.getLogger(name)
    return FaceLoggerAdapter(logger, {"type_label": type_label, "face": face or "-"})
