"""
Shared result-dictionary plumbing for services.
"""

import logging
from typing import Any, Callable, Dict, Optional

from config.settings import MESSAGES
from core.errors import EpigenError
from core.interfaces import MessageHandlerInterface

logger = logging.getLogger(__name__)


class BaseService:
    """Runs operations and converts toolkit errors into result dictionaries."""

    def __init__(self, message_handler: Optional[MessageHandlerInterface] = None):
        self.message_handler = message_handler

    def _run(self, operation: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        try:
            result = operation()
        except EpigenError as exc:
            logger.debug("operation failed: %s", exc)
            return self._failure(exc.status, str(exc))
        result.setdefault("success", result.get("status", "ok") == "ok")
        result.setdefault("status", "ok")
        result.setdefault("message", "")
        return result

    def _failure(self, status: str, message: str) -> Dict[str, Any]:
        if self.message_handler:
            self.message_handler.handle_error(message)
        return {"success": False, "status": status, "message": message}

    def _self_check(self, passed: bool, what: str, result: Dict[str, Any]) -> Dict[str, Any]:
        if passed:
            result.setdefault("message", MESSAGES["verified"])
            return result
        return self._failure("self_check_failed", MESSAGES["self_check"].format(what))
