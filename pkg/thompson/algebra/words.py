"""Standard forms of V_{n,r}.

A standard form is stored as a tree: a `SimpleWord` is a generator followed by
a path of descending letters (an element of x<A>), and a `Contraction` is the
lambda-contraction of exactly n standard forms that do not collapse.  The
postfix token row of the text format is produced on demand.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from thompson.exceptions import InvalidWordError, SignatureError, WordSyntaxError


class Signature(BaseModel):
    """Arity n of the contraction and number r of free generators."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Arity of lambda")
    r: int = Field(..., ge=1, description="Number of free generators")

    def __str__(self) -> str:
        return f"V({self.n},{self.r})"

    @property
    def letters(self) -> range:
        return range(1, self.n + 1)


def make_signature(n: int, r: int) -> Signature:
    """Build a Signature, reporting bad values as SignatureError."""
    if n < 2 or r < 1:
        raise SignatureError(f"invalid signature n={n}, r={r}: need n >= 2 and r >= 1")
    return Signature(n=n, r=r)


class TokenKind(StrEnum):
    """Token kinds of an Omega-row."""

    GENERATOR = "x"
    LETTER = "a"
    LAMBDA = "L"


class Token(NamedTuple):
    kind: TokenKind
    index: int = 0

    def __str__(self) -> str:
        if self.kind is TokenKind.LAMBDA:
            return "L"
        return f"{self.kind.value}{self.index}"


LAMBDA = Token(TokenKind.LAMBDA)

OmegaRow = tuple[Token, ...]


@dataclass(frozen=True, slots=True, order=True)
class SimpleWord:
    """x_generator followed by the letters in path; ordered left to right in the forest."""

    generator: int
    path: tuple[int, ...] = ()

    def __str__(self) -> str:
        return format_word(self)

    def child(self, letter: int) -> SimpleWord:
        return SimpleWord(self.generator, self.path + (letter,))

    def parent(self) -> SimpleWord:
        return SimpleWord(self.generator, self.path[:-1])

    def prefixes(self) -> Iterable[SimpleWord]:
        """All initial segments, shortest first, including the word itself."""
        for k in range(len(self.path) + 1):
            yield SimpleWord(self.generator, self.path[:k])


@dataclass(frozen=True, slots=True)
class Contraction:
    """w_1 ... w_n lambda, with the children not of the form u a_1 ... u a_n."""

    children: tuple[Word, ...]

    def __str__(self) -> str:
        return format_word(self)


Word = SimpleWord | Contraction


def generator(index: int) -> SimpleWord:
    return SimpleWord(index)


# -- construction -----------------------------------------------------------


def descend(word: Word, path: Sequence[int]) -> Word:
    """Return the standard form of word followed by the letters of path."""
    current = word
    for position, letter in enumerate(path):
        if isinstance(current, SimpleWord):
            return SimpleWord(current.generator, current.path + tuple(path[position:]))
        current = current.children[letter - 1]
    return current


def contract(children: Sequence[Word]) -> Word:
    """Return the standard form of children[0] ... children[n-1] lambda."""
    first = children[0]
    if isinstance(first, SimpleWord) and first.path and first.path[-1] == 1:
        stem = first.path[:-1]
        if all(
            isinstance(child, SimpleWord) and child.generator == first.generator and child.path == stem + (i,)
            for i, child in enumerate(children, start=1)
        ):
            return SimpleWord(first.generator, stem)
    return Contraction(tuple(children))


def lambda_length(word: Word) -> int:
    """Number of lambda tokens in the standard form."""
    if isinstance(word, SimpleWord):
        return 0
    return 1 + sum(lambda_length(child) for child in word.children)


def is_simple(word: Word) -> bool:
    return isinstance(word, SimpleWord)


# -- rows and text ----------------------------------------------------------


def to_row(word: Word) -> OmegaRow:
    """Postfix token row of a standard form."""
    if isinstance(word, SimpleWord):
        return (Token(TokenKind.GENERATOR, word.generator),) + tuple(Token(TokenKind.LETTER, j) for j in word.path)
    row: tuple[Token, ...] = ()
    for child in word.children:
        row += to_row(child)
    return row + (LAMBDA,)


def format_row(row: Iterable[Token]) -> str:
    return " ".join(str(token) for token in row)


def format_word(word: Word) -> str:
    """Text form, e.g. "x1 a2 a2 x1 a2 a1 L"."""
    return format_row(to_row(word))


def parse_row(sig: Signature, text: str, line: int | None = None) -> OmegaRow:
    """Tokenise whitespace-separated `x<i>`, `a<j>` and `L` tokens.

    Raises:
        WordSyntaxError: On an unknown token.
        SignatureError: On an index outside 1..r or 1..n.
    """
    tokens: list[Token] = []
    for column, raw in enumerate(text.split(), start=1):
        if raw in ("L", "λ"):
            tokens.append(LAMBDA)
            continue
        head, digits = raw[:1], raw[1:]
        if head not in ("x", "a") or not digits.isdigit():
            raise WordSyntaxError(f"unrecognised token {raw!r}", line=line, column=column)
        index = int(digits)
        if head == "x":
            if not 1 <= index <= sig.r:
                raise SignatureError(f"generator x{index} outside 1..{sig.r} (token {column})")
            tokens.append(Token(TokenKind.GENERATOR, index))
        else:
            if not 1 <= index <= sig.n:
                raise SignatureError(f"letter a{index} outside 1..{sig.n} (token {column})")
            tokens.append(Token(TokenKind.LETTER, index))
    if not tokens:
        raise WordSyntaxError("empty word", line=line, column=1)
    return tuple(tokens)


def _valency(sig: Signature, token: Token) -> int:
    if token.kind is TokenKind.GENERATOR:
        return 1
    if token.kind is TokenKind.LETTER:
        return 0
    return 1 - sig.n


def _check_ranges(sig: Signature, row: Sequence[Token]) -> None:
    for token in row:
        if token.kind is TokenKind.GENERATOR and not 1 <= token.index <= sig.r:
            raise SignatureError(f"generator x{token.index} outside 1..{sig.r}")
        if token.kind is TokenKind.LETTER and not 1 <= token.index <= sig.n:
            raise SignatureError(f"letter a{token.index} outside 1..{sig.n}")


def validate_row(sig: Signature, row: Sequence[Token]) -> bool:
    """True iff every proper left factor has positive valency and the whole row has valency 1."""
    _check_ranges(sig, row)
    total = 0
    for position, token in enumerate(row):
        total += _valency(sig, token)
        if total <= 0 and position < len(row) - 1:
            return False
    return len(row) > 0 and total == 1


def reduce(sig: Signature, row: Sequence[Token]) -> Word:
    """Return the standard form of a valid Omega-row.

    Raises:
        InvalidWordError: If the row is not an Omega-word.
    """
    if not validate_row(sig, row):
        raise InvalidWordError(f"not a word of {sig}: {format_row(row)}")
    stack: list[Word] = []
    for token in row:
        if token.kind is TokenKind.GENERATOR:
            stack.append(SimpleWord(token.index))
        elif token.kind is TokenKind.LETTER:
            stack.append(descend(stack.pop(), (token.index,)))
        else:
            children = stack[-sig.n :]
            del stack[-sig.n :]
            stack.append(contract(children))
    return stack[0]


def parse_word(sig: Signature, text: str, line: int | None = None) -> Word:
    """Parse text and return its standard form."""
    row = parse_row(sig, text, line=line)
    if not validate_row(sig, row):
        raise InvalidWordError(f"not a word of {sig}: {text.strip()}")
    return reduce(sig, row)


def is_standard_row(sig: Signature, row: Sequence[Token]) -> bool:
    """True iff the row is a valid word with no redex."""
    return validate_row(sig, row) and to_row(reduce(sig, row)) == tuple(row)


def equal_words(u: Word, v: Word) -> bool:
    """Word equality in V_{n,r}; standard forms are unique, so this is structural."""
    return u == v


# -- prefix structure -------------------------------------------------------


def is_initial_segment(u: Word, v: Word) -> tuple[int, ...] | None:
    """Return the path G with v = uG, or None.  The empty path means u == v."""
    if u == v:
        return ()
    if isinstance(u, SimpleWord):
        if isinstance(v, SimpleWord) and v.generator == u.generator and v.path[: len(u.path)] == u.path:
            return v.path[len(u.path) :]
        return None
    for letter, child in enumerate(u.children, start=1):
        rest = is_initial_segment(child, v)
        if rest is not None:
            return (letter,) + rest
    return None


# -- single rewrites --------------------------------------------------------


def _subterm_spans(sig: Signature, row: Sequence[Token]) -> tuple[list[int], dict[int, list[tuple[int, int]]]]:
    """Start index of the subterm ending at each position, and the operand spans of every lambda."""
    starts: list[int] = []
    operands: dict[int, list[tuple[int, int]]] = {}
    stack: list[int] = []
    for position, token in enumerate(row):
        if token.kind is TokenKind.GENERATOR:
            stack.append(position)
        elif token.kind is TokenKind.LETTER:
            stack.append(stack.pop())
        else:
            begins = stack[-sig.n :]
            del stack[-sig.n :]
            ends = [b - 1 for b in begins[1:]] + [position - 1]
            operands[position] = list(zip(begins, ends, strict=True))
            stack.append(begins[0])
        starts.append(stack[-1])
    return starts, operands


def one_step_rewrites(sig: Signature, row: Sequence[Token]) -> list[OmegaRow]:
    """All rows obtained from a valid row by a single rewrite at one redex.

    The two rules are u a_1 ... u a_n L -> u and w_1 ... w_n L a_i -> w_i.
    """
    row = tuple(row)
    starts, operands = _subterm_spans(sig, row)
    results: list[OmegaRow] = []
    for position, token in enumerate(row):
        if token.kind is TokenKind.LAMBDA:
            spans = operands[position]
            pieces = [row[b : e + 1] for b, e in spans]
            stems = {piece[:-1] for piece in pieces}
            if len(stems) == 1 and all(
                piece[-1] == Token(TokenKind.LETTER, i) and len(piece) > 1 for i, piece in enumerate(pieces, start=1)
            ):
                (stem,) = stems
                results.append(row[: spans[0][0]] + stem + row[position + 1 :])
        elif token.kind is TokenKind.LETTER and position > 0 and row[position - 1].kind is TokenKind.LAMBDA:
            spans = operands[position - 1]
            b, e = spans[token.index - 1]
            results.append(row[: starts[position - 1]] + row[b : e + 1] + row[position + 1 :])
    return results
