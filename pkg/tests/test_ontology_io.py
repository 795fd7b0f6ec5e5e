import pytest

from pinpoint.core.exceptions import DuplicateId, ParseError, UnsupportedConstruct
from pinpoint.models import (
    All, And, Axiom, Gci, Name, Not, Ontology, Or, RoleInclusion, Signature, Some, TOP,
    conjunction, nnf, nnf_not, signature_of,
)
from pinpoint.utils import load_ontology, parse_goal, parse_ontology, save_ontology, serialize_ontology


def test_parse_assigns_positional_ids(o2):
    assert o2.ids == ["ax1", "ax2"]
    assert o2.get("ax1").kind == Gci(Name("A"), Name("B"))
    assert o2.get("ax2").kind == Gci(Name("B"), Name("C"))


def test_parse_keeps_labels_and_comments():
    o = parse_ontology("# header\nfoo: (sub A (and B C))  # trailing\n\n(rsub r s)\n")
    assert o.ids == ["foo", "ax2"]
    assert o.get("foo").kind == Gci(Name("A"), And((Name("B"), Name("C"))))
    assert o.get("ax2").kind == RoleInclusion("r", "s")


def test_parse_all_constructors():
    o = parse_ontology("(sub (or A (not B)) (all r (some s Top)))")
    kind = o.axioms[0].kind
    assert kind.lhs == Or((Name("A"), Not(Name("B"))))
    assert kind.rhs == All("r", Some("s", TOP))


def test_serialize_canonical_form(o2):
    assert serialize_ontology(o2) == "ax1: (sub A B)\nax2: (sub B C)"


def test_serialize_parses_back(o1):
    assert parse_ontology(serialize_ontology(o1)) == o1


def test_save_and_load(tmp_path, o1):
    path = tmp_path / "o1.ont"
    save_ontology(o1, path)
    assert load_ontology(path) == o1


def test_empty_text_gives_empty_ontology():
    o = parse_ontology("")
    assert len(o) == 0
    assert serialize_ontology(o) == ""


@pytest.mark.parametrize("text,line,column", [
    ("(sub A", 1, 7),
    ("(sub A B) extra", 1, 11),
    ("(sub A B)\n(foo A B)", 2, 2),
    ("(sub (and A) B)", 1, 12),
    ("(sub A sub)", 1, 8),
])
def test_parse_error_position(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_ontology(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_duplicate_id():
    with pytest.raises(DuplicateId) as exc:
        parse_ontology("x: (sub A B)\nx: (sub B C)")
    assert exc.value.axiom_id == "x"


def test_assertions_are_unsupported():
    with pytest.raises(UnsupportedConstruct):
        parse_ontology("(inst a A)")


def test_parse_goal():
    assert parse_goal("(sub A C)") == Gci(Name("A"), Name("C"))
    with pytest.raises(ParseError):
        parse_goal("(rsub r s)")
    with pytest.raises(ParseError):
        parse_goal("")


def test_signature(o1, o2):
    assert signature_of(o2) == Signature(frozenset("ABC"), frozenset())
    sig = signature_of(o1)
    assert sig.concept_names == frozenset("ABCD")
    assert sig.role_names == frozenset({"r"})
    assert signature_of(Ontology()) == Signature()


def test_ontology_set_operations(o1):
    assert o1.without(["ax3"]).ids == ["ax1", "ax2", "ax4"]
    assert o1.subset(["ax4", "ax1"]).ids == ["ax1", "ax4"]
    assert o1.sort_ids({"ax4", "ax2"}) == ["ax2", "ax4"]
    assert "ax3" in o1 and "ax9" not in o1


def test_duplicate_axiom_objects_rejected():
    ax = Axiom("a", Gci(Name("A"), Name("B")))
    with pytest.raises(DuplicateId):
        Ontology([ax, ax])


def test_nnf_pushes_negation_to_names():
    c = Not(And((Name("A"), Some("r", Name("B")))))
    assert nnf(c) == Or((Not(Name("A")), All("r", Not(Name("B")))))
    assert nnf_not(nnf_not(Name("A"))) == Name("A")


def test_conjunction_collapses():
    assert conjunction([]) == TOP
    assert conjunction([Name("A")]) == Name("A")
    with pytest.raises(ValueError):
        And((Name("A"),))


def test_label_colliding_with_assigned_id_is_named():
    with pytest.raises(DuplicateId) as exc:
        parse_ontology("(sub A B)\nax1: (sub B C)")
    assert exc.value.axiom_id == "ax1"
    assert "lines 1 and 2" in str(exc.value)
    assert "numbered ax<k> by position" in str(exc.value)


def test_repeated_label_names_both_lines():
    with pytest.raises(DuplicateId) as exc:
        parse_ontology("x: (sub A B)\n\nx: (sub B C)")
    assert str(exc.value) == "duplicate axiom id: x (lines 1 and 3)"
