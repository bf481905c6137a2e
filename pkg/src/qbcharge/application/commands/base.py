"""Command, handler and bus for charging runs."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Generic, TypeVar

from qbcharge.config.settings import Settings
from qbcharge.domain.services.numkernel import EigenMethod

logger = logging.getLogger(__name__)


class Command(ABC):  # noqa: B024
    """Marker base for the immutable run requests dispatched on the bus."""


TCommand = TypeVar("TCommand", bound=Command)
TResult = TypeVar("TResult")


class CommandHandler(ABC, Generic[TCommand, TResult]):
    """Runs one command type against the process settings."""

    def __init__(self, settings: Settings) -> None:
        self._settings = settings

    @property
    def eigensolver(self) -> EigenMethod:
        return self._settings.eigensolver

    @abstractmethod
    async def handle(self, command: TCommand) -> TResult:
        """Run the command and return its DTO."""


class CommandBus:
    """Dispatches each command to the handler registered for its exact type."""

    def __init__(self) -> None:
        self._handlers: dict[type[Command], CommandHandler[Any, Any]] = {}

    def register(self, command_type: type[TCommand], handler: CommandHandler[TCommand, Any]) -> None:
        self._handlers[command_type] = handler

    async def execute(self, command: Command) -> Any:
        handler = self._handlers.get(type(command))
        if handler is None:
            raise ValueError(f"No handler registered for command {type(command).__name__}")
        logger.debug("Dispatching %s to %s", type(command).__name__, type(handler).__name__)
        return await handler.handle(command)
