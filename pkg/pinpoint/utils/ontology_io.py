# filepath: pinpoint/utils/ontology_io.py
"""
Reader and writer for the s-expression ontology syntax.

    line    := [ID ':'] axiom
    axiom   := '(sub' C C ')' | '(rsub' NAME NAME ')'
    C       := NAME | 'Top' | 'Bot' | '(not' C ')' | '(and' C C+ ')'
             | '(or' C C+ ')' | '(some' NAME C ')' | '(all' NAME C ')'

One axiom per line; '#' starts a comment running to the end of the line.
"""
import logging
import re
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from pinpoint.core.exceptions import DuplicateId, ParseError, UnsupportedConstruct
from pinpoint.models import (
    BOT, TOP, All, And, Axiom, ConceptExpr, Gci, Name, Not, Ontology, Or, RoleInclusion, Some,
)

logger = logging.getLogger(__name__)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*\Z")
TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|(:)|([^\s():]+))")

KEYWORDS = {"sub", "rsub", "not", "and", "or", "some", "all", "Top", "Bot"}
ASSERTION_FORMS = {"inst", "rel"}


class Token(NamedTuple):
    text: str
    line: int
    column: int


def _tokenize(line_text: str, line_no: int) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(line_text):
        m = TOKEN_RE.match(line_text, pos)
        if m is None:
            break
        if m.end() == pos:
            break
        text = m.group(1) or m.group(2) or m.group(3) or m.group(4)
        if text is None:
            break
        tokens.append(Token(text, line_no, m.start(m.lastindex) + 1))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens: List[Token], line_no: int, line_len: int):
        self.tokens = tokens
        self.i = 0
        self.line_no = line_no
        self.end_column = line_len + 1

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        if token is None:
            token = self.peek()
        column = token.column if token else self.end_column
        return ParseError(self.line_no, column, message)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, expected: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise self.error(f"unexpected end of line, expected {expected}")
        self.i += 1
        return tok

    def expect(self, text: str):
        tok = self.next(f"'{text}'")
        if tok.text != text:
            raise self.error(f"expected '{text}', found '{tok.text}'", tok)

    def name(self, what: str) -> str:
        tok = self.next(what)
        if tok.text in KEYWORDS or not NAME_RE.match(tok.text):
            raise self.error(f"expected {what}, found '{tok.text}'", tok)
        return tok.text

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    def concept(self) -> ConceptExpr:
        tok = self.next("concept")
        if tok.text == "Top":
            return TOP
        if tok.text == "Bot":
            return BOT
        if tok.text == "(":
            head = self.next("concept constructor")
            if head.text == "not":
                c = self.concept()
                self.expect(")")
                return Not(c)
            if head.text in ("and", "or"):
                members = [self.concept(), self.concept()]
                while self.peek() is not None and self.peek().text != ")":
                    members.append(self.concept())
                self.expect(")")
                return And(tuple(members)) if head.text == "and" else Or(tuple(members))
            if head.text in ("some", "all"):
                role = self.name("role name")
                c = self.concept()
                self.expect(")")
                return Some(role, c) if head.text == "some" else All(role, c)
            raise self.error(f"unknown concept constructor '{head.text}'", head)
        if tok.text in KEYWORDS or not NAME_RE.match(tok.text):
            raise self.error(f"expected concept, found '{tok.text}'", tok)
        return Name(tok.text)

    def axiom_kind(self) -> Union[Gci, RoleInclusion]:
        self.expect("(")
        head = self.next("axiom form")
        if head.text == "sub":
            lhs = self.concept()
            rhs = self.concept()
            self.expect(")")
            return Gci(lhs, rhs)
        if head.text == "rsub":
            sub = self.name("role name")
            sup = self.name("role name")
            self.expect(")")
            return RoleInclusion(sub, sup)
        if head.text in ASSERTION_FORMS:
            raise UnsupportedConstruct(
                f"line {self.line_no}, column {head.column}: assertion form '{head.text}' is not supported"
            )
        raise self.error(f"unknown axiom form '{head.text}'", head)


def _strip_comment(line: str) -> str:
    idx = line.find("#")
    return line if idx < 0 else line[:idx]


def parse_ontology(text: str) -> Ontology:
    """
    Parse ontology text into an Ontology.

    Args:
        text: ontology source, one axiom per line

    Returns:
        Ontology with labelled ids kept and unlabelled axioms numbered ax<k>
        by their position in the text

    Raises:
        ParseError: malformed line
        DuplicateId: repeated label, or a label equal to the ax<k> id of an
            unlabelled axiom
        UnsupportedConstruct: ABox assertion forms
    """
    axioms: List[Axiom] = []
    origin: Dict[str, Tuple[int, bool]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        tokens = _tokenize(line, line_no)
        if not tokens:
            continue
        parser = _LineParser(tokens, line_no, len(line.rstrip()))

        label: Optional[str] = None
        if len(tokens) >= 2 and tokens[1].text == ":":
            label = parser.name("axiom id")
            parser.expect(":")

        kind = parser.axiom_kind()
        if not parser.at_end():
            raise parser.error(f"unexpected trailing token '{parser.peek().text}'")

        axiom_id = label or f"ax{len(axioms) + 1}"
        if axiom_id in origin:
            first_line, first_assigned = origin[axiom_id]
            if first_assigned or label is None:
                raise DuplicateId(
                    axiom_id,
                    f"lines {first_line} and {line_no}: unlabelled axioms are numbered ax<k> by position",
                )
            raise DuplicateId(axiom_id, f"lines {first_line} and {line_no}")
        origin[axiom_id] = (line_no, label is None)
        axioms.append(Axiom(axiom_id, kind))

    ontology = Ontology(axioms)
    logger.debug(f"Parsed ontology with {len(ontology)} axioms")
    return ontology


def parse_goal(text: str) -> Gci:
    """Parse a goal inclusion such as '(sub A C)'"""
    line = _strip_comment(text.strip())
    tokens = _tokenize(line, 1)
    if not tokens:
        raise ParseError(1, 1, "empty goal")
    parser = _LineParser(tokens, 1, len(line))
    kind = parser.axiom_kind()
    if not parser.at_end():
        raise parser.error(f"unexpected trailing token '{parser.peek().text}'")
    if not isinstance(kind, Gci):
        raise ParseError(1, tokens[0].column, "goal must be a concept inclusion (sub C D)")
    return kind


def serialize_ontology(o: Ontology) -> str:
    """Canonical text; parse_ontology(serialize_ontology(o)) == o"""
    return "\n".join(str(ax) for ax in o)


def load_ontology(path: Union[str, Path]) -> Ontology:
    return parse_ontology(Path(path).read_text(encoding="utf-8"))


def save_ontology(o: Ontology, path: Union[str, Path]):
    text = serialize_ontology(o)
    Path(path).write_text(text + "\n" if text else "", encoding="utf-8")
