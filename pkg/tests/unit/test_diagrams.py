"""
Unit tests for labeled diagrams, shapes and their monomial codes.
"""

import pytest

from bell_hopf.combinatorics import bell
from bell_hopf.combinatorics import stirling2
from bell_hopf.diagrams import DiagramShape
from bell_hopf.diagrams import LabeledDiagram
from bell_hopf.diagrams import code_monomial
from bell_hopf.diagrams import decode_monomial
from bell_hopf.diagrams import enumerate_labeled_diagrams
from bell_hopf.diagrams import enumerate_shapes
from bell_hopf.diagrams import format_census
from bell_hopf.diagrams import shape_census
from bell_hopf.diagrams import shape_multiplicity
from bell_hopf.diagrams import shape_multiplicity_enumerated
from bell_hopf.diagrams import shape_of
from bell_hopf.diagrams import to_dot
from bell_hopf.diagrams import to_dot_bundle
from bell_hopf.errors import BoundExceededError
from bell_hopf.errors import DomainError
from bell_hopf.hopf import Monomial


class TestShapes:
    def test_from_parts_sorts(self):
        shape = DiagramShape.from_parts([1, 3, 1])
        assert shape.parts == (3, 1, 1)
        assert shape.weight == 5
        assert shape.components == 3
        assert shape.multiplicities() == {1: 2, 3: 1}
        assert str(shape) == "{3,1,1}"

    def test_parts_must_be_positive(self):
        with pytest.raises(DomainError):
            DiagramShape.from_parts([2, 0])

    def test_code_and_decode(self):
        shape = DiagramShape.from_parts([2, 1])
        code = code_monomial(shape)
        assert str(code) == "y1*y2"
        assert code.weight == shape.weight
        assert code.degree == shape.components
        assert decode_monomial(Monomial.from_letters([2, 1])) == shape
        assert str(code_monomial(DiagramShape())) == "e"

    def test_shapes_of_four(self):
        assert [s.parts for s in enumerate_shapes(4)] == [(1, 1, 1, 1), (2, 1, 1), (3, 1), (2, 2), (4,)]
        assert enumerate_shapes(0) == [DiagramShape()]


class TestMultiplicity:
    """Closed form n!/∏ (k!)^{m_k} m_k! against enumeration."""

    @pytest.mark.parametrize(
        "parts, count",
        [((4,), 1), ((3, 1), 4), ((2, 2), 3), ((2, 1, 1), 6), ((1, 1, 1, 1), 1), ((3, 2, 2), 105)],
    )
    def test_closed_form(self, parts, count):
        assert shape_multiplicity(DiagramShape.from_parts(parts)) == count

    @pytest.mark.parametrize("n", [*range(0, 9), *(pytest.param(n, marks=pytest.mark.slow) for n in (9, 10))])
    def test_closed_form_matches_enumeration(self, n):
        assert shape_census(n, "closed") == shape_census(n, "enumerate")

    def test_enumerated_bound(self):
        with pytest.raises(BoundExceededError):
            shape_multiplicity_enumerated(DiagramShape.from_parts([11]))
        assert shape_multiplicity_enumerated(DiagramShape.from_parts([2, 2, 1])) == 15

    @pytest.mark.parametrize("n", [5, 12, 25])
    def test_census_sums_to_bell(self, n):
        assert sum(count for _, count in shape_census(n)) == bell(n)

    def test_census_by_components_is_stirling(self):
        n = 9
        by_k = {}
        for shape, count in shape_census(n):
            by_k[shape.components] = by_k.get(shape.components, 0) + count
        assert by_k == {k: stirling2(n, k) for k in range(1, n + 1)}

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            shape_census(3, "sampled")  # type: ignore[arg-type]


class TestLabeledDiagrams:
    def test_three_lines(self):
        diagrams = list(enumerate_labeled_diagrams(3))
        assert len(diagrams) == 5
        assert [str(shape_of(d)) for d in diagrams] == ["{3}", "{2,1}", "{2,1}", "{2,1}", "{1,1,1}"]
        assert format_census(shape_census(3)) == "y1^3:1, y1*y2:3, y3:1"

    def test_black_dot_lookup(self):
        diagram = LabeledDiagram.from_blocks([[3, 1], [2]])
        assert diagram.black_dot_of(3) == 1
        assert diagram.black_dot_of(2) == 2
        with pytest.raises(DomainError):
            diagram.black_dot_of(4)

    def test_empty_diagram(self):
        (only,) = list(enumerate_labeled_diagrams(0))
        assert only.n == 0
        assert format_census(shape_census(0)) == "e:1"

    def test_dot_output(self):
        diagram = LabeledDiagram.from_blocks([[1, 3], [2]])
        assert to_dot(diagram, "d") == (
            "graph d {\n"
            '  node [shape=circle, label="", width=0.2];\n'
            "  w1 [style=filled, fillcolor=white];\n"
            "  w2 [style=filled, fillcolor=white];\n"
            "  w3 [style=filled, fillcolor=white];\n"
            "  b1 [style=filled, fillcolor=black];\n"
            "  b2 [style=filled, fillcolor=black];\n"
            "  w1 -- b1;\n"
            "  w3 -- b1;\n"
            "  w2 -- b2;\n"
            "}\n"
        )

    def test_dot_bundle_names_graphs(self):
        bundle = to_dot_bundle(enumerate_labeled_diagrams(3))
        assert bundle.count("graph d") == 5
        assert "graph d5 {" in bundle
        assert bundle.count(" -- ") == 15
