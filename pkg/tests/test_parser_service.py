import pytest

from app.core.config import settings
from app.core.errors import ParseError
from app.services.parser_service import parse_algebra_file, read_algebra_file

A2 = """\
# comment line
name: A2
prime: 7
vertices: 2
arrow: a: 1 -> 2
"""


def test_reads_header_and_arrows():
    parsed = read_algebra_file(A2)
    assert parsed.name == "A2"
    assert parsed.prime == 7
    assert parsed.vertices == 2
    assert [(a.id, a.source, a.target) for a in parsed.arrows] == [("a", 0, 1)]


def test_builds_algebra_with_default_caps():
    algebra, caps = parse_algebra_file(A2)
    assert algebra.dim == 3
    assert algebra.field_prime == 7
    assert caps.catalog == settings.CATALOG_CAP
    assert caps.seed == settings.SEED


def test_command_line_overrides_file():
    text = A2 + "caps: catalog=40 resolution=5\n"
    algebra, caps = parse_algebra_file(text, prime=11, catalog=12, seed=3)
    assert algebra.field_prime == 11
    assert caps.catalog == 12
    assert caps.resolution == 5
    assert caps.seed == 3


def test_relation_with_coefficients():
    text = """\
vertices: 4
arrow: a: 1 -> 2
arrow: b: 1 -> 3
arrow: c: 2 -> 4
arrow: d: 3 -> 4
relation: 2*a.c - 2*b.d = 0
"""
    algebra, _ = parse_algebra_file(text)
    assert algebra.dim == 9
    assert algebra.name == "algebra"


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("vertices: 2\nfoo: 1\n", 2, "unknown key"),
        ("vertices: 2\nvertices: 3\n", 2, "given twice"),
        ("prime: 12\nvertices: 1\n", 1, "not a supported prime"),
        ("vertices: x\n", 1, "non-negative integer"),
        ("vertices: 2\narrow: a 1 -> 2\n", 2, "arrow must read"),
        ("vertices: 2\narrow: a: 1 -> 2\narrow: a: 2 -> 1\n", 3, "duplicate arrow"),
        ("vertices: 2\narrow: a: 1 -> 3\n", 2, "outside 1..2"),
        ("vertices: 1\narrow: x: 1 -> 1\nrelation: x.y = 0\n", 3, "unknown arrow"),
        ("vertices: 1\narrow: x: 1 -> 1\nrelation: x.x\n", 3, "= 0"),
        ("vertices: 2\narrow: a: 1 -> 2\nrelation: a.a = 0\n", 3, "not composable"),
        ("vertices: 2\narrow: a: 1 -> 2\nrelation: a = 0\n", 3, "length >= 2"),
        ("vertices: 1\narrow: x: 1 -> 1\nrelation: x.x - x.x.x = 0\n", 3, "same length"),
        ("vertices: 1\ncaps: depth=3\n", 2, "unknown cap"),
        ("vertices: 1\ncaps: catalog=0\n", 2, "at least 1"),
        ("name: nothing\n", 1, "missing 'vertices:'"),
        ("vertices 2\n", 1, "key: value"),
    ],
)
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_algebra_file(text)
    assert info.value.line == line
    assert info.value.column >= 1
    assert fragment in info.value.message


def test_relation_column_points_at_term():
    text = "vertices: 1\narrow: x: 1 -> 1\nrelation: x.x + x.z = 0\n"
    with pytest.raises(ParseError) as info:
        parse_algebra_file(text)
    assert info.value.column > len("relation: x.x + ")


def test_mixed_length_relation_names_the_homogeneous_restriction():
    text = "vertices: 2\narrow: a: 1 -> 2\narrow: b: 2 -> 2\nrelation: a.b - a.b.b = 0\n"
    with pytest.raises(ParseError) as info:
        parse_algebra_file(text)
    assert "only homogeneous relations are supported" in info.value.message


def test_relation_problems_report_mixed_lengths():
    from app.models.quiver import Arrow, Quiver, Relation

    quiver = Quiver(1, (Arrow("x", 0, 0),))
    relation = Relation(((1, quiver.make_path((0, 0))), (-1, quiver.make_path((0, 0, 0)))))
    assert any("homogeneous" in issue for issue in relation.problems())
