"""Exception types raised by alefrank."""


class AlefError(Exception):
    """Base class for errors reported to the user."""


class FormatError(AlefError, ValueError):
    """An input file line could not be parsed."""


class ConfigError(AlefError, ValueError):
    """A configuration value violates its contract."""


class EmptyJudgmentError(AlefError, ValueError):
    """No resolvable judgment pairs were available for evaluation."""
