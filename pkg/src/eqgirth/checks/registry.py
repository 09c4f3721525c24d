"""Check registration and management system for eqgirth.

This module provides a registry for managing check classes, keyed by the CLI
subcommand that runs them.
"""

from eqgirth.checks.base.check import BaseCheck
from eqgirth.utils.name import command_name


class CheckRegistry:
    """Registry for managing check classes.

    The registry keeps checks in registration order, which is also the order
    in which the ``all`` subcommand runs them.

    Attributes:
        _checks: Internal dictionary mapping subcommands to check classes.
    """

    def __init__(self) -> None:
        """Initialize an empty check registry."""
        self._checks: dict[str, type[BaseCheck]] = {}

    def __contains__(self, name: str) -> bool:
        """Check if a subcommand is registered."""
        return name in self._checks

    def __len__(self) -> int:
        """Return the number of registered checks."""
        return len(self._checks)

    def __repr__(self) -> str:
        """Return string representation of the registry."""
        return f"{self.__class__.__name__}(entries={len(self._checks)})"

    def register(self, name: str, check_class: type[BaseCheck]) -> type[BaseCheck]:
        """
        Register a check class.

        Args:
            name: The subcommand to register the check under
            check_class: The check class to register

        Returns:
            The check class (for use as decorator)
        """
        self._checks[name] = check_class
        return check_class

    def unregister(self, name: str) -> None:
        """
        Unregister a check class.

        Args:
            name: The subcommand of the check to unregister
        """
        self._checks.pop(name, None)

    def get(self, name: str, default: type[BaseCheck] | None = None) -> type[BaseCheck] | None:
        """
        Get a check class by subcommand.

        Args:
            name: The subcommand of the check
            default: Returned when no check is registered under ``name``

        Returns:
            The check class or default if not found
        """
        return self._checks.get(name, default)

    def clear(self) -> None:
        """Clear all registered checks."""
        self._checks.clear()

    def items(self) -> list[tuple[str, type[BaseCheck]]]:
        """Get all registered checks in registration order."""
        return list(self._checks.items())

    def keys(self) -> list[str]:
        """Get all registered subcommands in registration order."""
        return list(self._checks.keys())

    def values(self) -> list[type[BaseCheck]]:
        """Get all registered check classes in registration order."""
        return list(self._checks.values())


# Global registry instance
registry = CheckRegistry()


def register_check[T: BaseCheck](check: type[T]) -> type[T]:
    """Register a check class with the global registry.

    The subcommand is the class name without its ``Check`` suffix, in
    kebab-case.

    Args:
        check: The check class to register.

    Returns:
        The registered check class (for use as decorator).

    Examples:
        >>> @register_check
        ... class CaseSplitCheck(BaseCheck):
        ...     pass
        >>> 'case-split' in registry
        True
    """
    registry.register(command_name(check.__name__), check)
    return check
