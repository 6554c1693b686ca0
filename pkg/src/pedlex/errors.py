"""Exception hierarchy.

Everything raised for bad *input* (files, symbols, flags) derives from
PedlexError; the CLI maps these to exit code 1. Anything else escaping to
the CLI is treated as an internal invariant violation (exit code 2).
"""


class PedlexError(Exception):
    """Base class for input and data-file errors."""


class InventoryError(PedlexError):
    """Malformed or inconsistent feature-inventory file."""


class UnknownSymbolError(PedlexError):
    """IPA symbol not present in the inventory."""


class TokenizeError(PedlexError):
    """Input text cannot be tokenized against the inventory."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class ConfigError(PedlexError):
    """Distance-weight configuration violates its invariants."""


class MannerTableError(PedlexError):
    """Manner-distance table is incomplete, asymmetric or out of range."""


class ConlluError(PedlexError):
    """CoNLL-U input unusable (not just a skippable bad line)."""


class G2PError(PedlexError):
    """Grapheme-to-phoneme table problem or script mismatch."""


class WordListError(PedlexError):
    """Word-list file malformed, or list unusable for alignment."""
