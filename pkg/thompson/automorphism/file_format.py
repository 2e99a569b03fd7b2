"""Reading and writing automorphism files.

    thompson v1
    n 2
    r 1
    map x1 a1 a1 -> x1 a1
    map x1 a1 a2 -> x1 a2 a1
    map x1 a2 -> x1 a2 a2

Lines starting with ``#`` and blank lines are ignored.  Maps may be given on
any basis; the result is canonicalised.
"""

import logging
from pathlib import Path

from thompson.algebra.words import Signature, Word, format_word, make_signature, parse_word
from thompson.automorphism.symbol import Automorphism, from_map
from thompson.exceptions import InvalidWordError, SignatureError, WordSyntaxError

logger = logging.getLogger(__name__)

HEADER = "thompson v1"
EXAMPLES_DIR = Path(__file__).resolve().parent.parent / "examples"


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((number, line))
    return lines


def _integer_field(name: str, entry: tuple[int, str] | None) -> int:
    if entry is None:
        raise WordSyntaxError(f"missing '{name}' line")
    number, line = entry
    key, _, value = line.partition(" ")
    if key != name or not value.strip().isdigit():
        raise WordSyntaxError(f"expected '{name} <integer>', got {line!r}", line=number)
    return int(value.strip())


def _parse_map(sig: Signature, number: int, line: str) -> tuple[Word, Word]:
    keyword, _, body = line.partition(" ")
    if keyword != "map" or "->" not in body:
        raise WordSyntaxError(f"expected 'map <word> -> <word>', got {line!r}", line=number)
    left, _, right = body.partition("->")
    try:
        return parse_word(sig, left, line=number), parse_word(sig, right, line=number)
    except (SignatureError, InvalidWordError) as e:
        raise WordSyntaxError(e.message, line=number) from e


def loads_automorphism(text: str) -> Automorphism:
    """Parse the text of an automorphism file.

    Raises:
        WordSyntaxError: On a malformed line, with its line number.
        NotABasisError: If either side of the maps is not a basis.
    """
    lines = _content_lines(text)
    if not lines or lines[0][1] != HEADER:
        raise WordSyntaxError(f"first line must be {HEADER!r}", line=lines[0][0] if lines else 1)
    n = _integer_field("n", lines[1] if len(lines) > 1 else None)
    r = _integer_field("r", lines[2] if len(lines) > 2 else None)
    try:
        sig = make_signature(n, r)
    except SignatureError as e:
        raise WordSyntaxError(e.message, line=lines[1][0]) from e

    pairs = [_parse_map(sig, number, line) for number, line in lines[3:]]
    if not pairs:
        raise WordSyntaxError("no 'map' lines", line=lines[-1][0])
    return from_map(sig, pairs)


def load_automorphism(path: str | Path) -> Automorphism:
    """Read an automorphism file from disk."""
    with open(path, encoding="utf-8") as f:
        return loads_automorphism(f.read())


def dumps_automorphism(psi: Automorphism, comment: str | None = None) -> str:
    """Canonical symbol of psi in file form, LF-terminated."""
    lines = [f"# {comment}"] if comment else []
    lines += [HEADER, f"n {psi.sig.n}", f"r {psi.sig.r}"]
    lines += [f"map {format_word(y)} -> {format_word(z)}" for y, z in psi.pairs()]
    return "\n".join(lines) + "\n"


def dump_automorphism(psi: Automorphism, path: str | Path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_automorphism(psi, comment))


def example_names() -> list[str]:
    """Names of the bundled example files."""
    return sorted(p.stem for p in EXAMPLES_DIR.glob("*.thm"))


def load_example(name: str) -> Automorphism:
    """Load a bundled example by name, e.g. "pond".

    Raises:
        FileNotFoundError: If no such example is bundled.
    """
    path = EXAMPLES_DIR / f"{name}.thm"
    if not path.exists():
        raise FileNotFoundError(f"unknown example {name!r}; available: {', '.join(example_names())}")
    logger.debug(f"loading example {name} from {path}")
    return load_automorphism(path)
