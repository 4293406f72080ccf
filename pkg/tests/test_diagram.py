import pytest
from hypothesis import given
from hypothesis import strategies as st

from hbk import (Diagram, ParseError, UnknownFixture, ValidationError, builtin_diagram,
                 parse_diagram, serialize_diagram, validate_diagram)
from hbk.diagram import BUILTIN_NAMES

from braids import braid_closure

braid_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8)


class TestParse:
    def test_two_crossing_text(self):
        D = parse_diagram("semiarcs 4\ncrossing + 1 2 3 4\ncrossing + 3 4 1 2\n")
        assert len(D.crossings) == 2 and validate_diagram(D).passed

    def test_theta_text_is_builtin(self):
        D = parse_diagram("semiarcs 3\nvertex split 3 1 2\nvertex merge 1 2 3\n")
        assert D == builtin_diagram("theta")

    def test_repeated_input(self):
        text = "semiarcs 4\ncrossing + 1 3 2 4\ncrossing + 2 3 4 1\n"
        with pytest.raises(ValidationError) as exc:
            parse_diagram(text)
        assert exc.value.semiarc == 3

    def test_out_of_range(self):
        with pytest.raises(ValidationError) as exc:
            parse_diagram("semiarcs 1\nloop 2\n")
        assert exc.value.semiarc == 2

    def test_comments(self):
        D = parse_diagram("# unknot\nsemiarcs 1  # one arc\n\nloop 1\n")
        assert D.loops == (0,)

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("crossing + 1 2 3 4\n", 1),
        ("semiarcs 4\ncrossing * 1 2 3 4\n", 2),
        ("semiarcs 4\ncrossing + 1 2 3\n", 2),
        ("semiarcs 3\nvertex fork 1 2 3\n", 2),
        ("semiarcs 2\nloop 1\nloop x\n", 3),
        ("semiarcs 2\nbridge 1 2\n", 2),
        ("semiarcs -1\n", 1),
    ])
    def test_syntax_errors(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_diagram(text)
        assert exc.value.line == line


class TestValidate:
    def test_hopf(self):
        assert validate_diagram(builtin_diagram("hopf")).passed

    def test_empty(self):
        assert validate_diagram(Diagram(0)).passed

    def test_unused_output(self):
        D = Diagram(2, (), (), [0])
        report = validate_diagram(D)
        assert ("output-missing", (2,)) in report.violations
        assert ("input-missing", (2,)) in report.violations

    def test_bad_sign_and_kind(self):
        from hbk import Crossing, Vertex
        D = Diagram(4, [Crossing(0, 0, 1, 2, 3)], [Vertex("fork", (0, 1, 2))])
        assert {"sign", "vertex-kind"} <= validate_diagram(D).labels()

    @given(st.integers(1, 3).flatmap(lambda k: st.tuples(st.just(k), braid_words)))
    def test_braid_closures_are_valid(self, args):
        strands, word = args
        word = [x for x in word if abs(x) < strands]
        D = braid_closure(strands, word)
        assert validate_diagram(D).passed
        assert D.num_semiarcs == 2 * len(word) + sum(
            1 for p in range(strands) if all(abs(x) not in (p, p + 1) for x in word))


class TestBuiltins:
    def test_hopf(self):
        assert len(builtin_diagram("hopf").crossings) == 2

    def test_kinoshita(self):
        D = builtin_diagram("kinoshita")
        assert (D.num_semiarcs, len(D.crossings), len(D.vertices)) == (13, 5, 2)

    def test_unlink2(self):
        D = builtin_diagram("unlink2")
        assert D.crossings == () and len(D.loops) == 2

    def test_trefoil_is_braid_closure(self):
        assert builtin_diagram("trefoil") == braid_closure(2, [1, 1, 1])

    def test_trefoil_r2_is_braid_closure(self):
        assert builtin_diagram("trefoil_r2") == braid_closure(2, [1, 1, 1, 1, -1])

    def test_unknown(self):
        with pytest.raises(UnknownFixture):
            builtin_diagram("borromean")

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_round_trip(self, name):
        D = builtin_diagram(name)
        assert validate_diagram(D).passed
        assert parse_diagram(serialize_diagram(D)) == D
