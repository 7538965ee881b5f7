"""Exception types shared across the toolkit.

The CLI maps ConfigError (and click usage errors) to exit code 2 and every
other ToolkitError to exit code 1.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class ParseError(ToolkitError):
    """A document could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructuralError(ToolkitError):
    """Dataset-level structural violation (e.g. duplicate utterance id)."""


class BioError(ToolkitError):
    """A BIO tag sequence violates the scheme.

    Carries the utterance id and token index of the first violation.
    """

    def __init__(self, message: str, utterance_id: str, token_index: int):
        self.utterance_id = utterance_id
        self.token_index = token_index
        super().__init__(
            f"utterance {utterance_id!r}, token {token_index}: {message}"
        )


class ConfigError(ToolkitError):
    """Invalid run configuration (bad path, unknown operator, missing seed)."""


class OperatorError(ToolkitError):
    """An operator could not be applied (bad resources, provider failure)."""


class ProviderError(ToolkitError):
    """A candidate provider failed; carries provider diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = dict(diagnostics or {})
        super().__init__(message)


class JoinError(ToolkitError):
    """Gold utterances and predictions could not be joined; lists the ids."""

    def __init__(self, message: str, ids: list[str]):
        self.ids = list(ids)
        shown = ", ".join(self.ids[:10])
        more = "" if len(self.ids) <= 10 else f" (+{len(self.ids) - 10} more)"
        super().__init__(f"{message}: {shown}{more}")


class CoverageError(ToolkitError):
    """A confidence table misses (utterance, operator) pairs; lists the gaps."""

    def __init__(self, gaps: list[tuple[str, str]]):
        self.gaps = list(gaps)
        shown = ", ".join(f"({i}, {o})" for i, o in self.gaps[:10])
        more = "" if len(self.gaps) <= 10 else f" (+{len(self.gaps) - 10} more)"
        super().__init__(
            f"confidence table is missing {len(self.gaps)} "
            f"(utterance, operator) pairs: {shown}{more}"
        )
