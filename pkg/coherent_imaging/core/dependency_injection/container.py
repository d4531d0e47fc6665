"""Global injector holding the toolkit's object graph."""

import logging
from typing import Optional, Type, TypeVar

from injector import Injector, Module

logger = logging.getLogger(__name__)

T = TypeVar("T")

_injector: Optional[Injector] = None


def is_injector_ready() -> bool:
    """True once setup_injector has run and clear_injector has not."""
    return _injector is not None


def get_injector() -> Injector:
    """Get the global injector instance."""
    if _injector is None:
        raise RuntimeError("Injector not setup. Call setup_injector() first.")
    return _injector


def setup_injector(*modules: Module) -> None:
    """Build the global injector from one or more modules; later modules override earlier bindings."""
    global _injector
    if not modules:
        raise ValueError("setup_injector needs at least one module")
    _injector = Injector(list(modules))
    logger.info("Dependency injection setup completed with %d module(s)", len(modules))


def get_dependency(interface: Type[T]) -> T:
    """Resolve an interface from the global injector."""
    return get_injector().get(interface)


def clear_injector() -> None:
    """Drop the global injector and every singleton it built."""
    global _injector
    _injector = None
    logger.info("Dependency injection cleared")
