"""Parser, printer, and statement syntax."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlattice import (
    Bin,
    Const,
    ConstantKind,
    Eq,
    Imp,
    Lit,
    Lt,
    MixedOperatorError,
    Ne,
    Neg,
    Or,
    ParseError,
    Var,
    format_relation,
    format_statement,
    format_term,
    free_variables,
    parse_goal,
    parse_statement,
    parse_statement_file,
    parse_term,
)


class TestParseTerm:
    def test_parenthesized_mix(self):
        got = parse_term("x ^ (y v z)")
        assert got == Bin("^", Var("x"), Bin("v", Var("y"), Var("z")))

    def test_unparenthesized_mix_rejected(self):
        with pytest.raises(MixedOperatorError):
            parse_term("x ^ y v z")

    def test_postfix_complement_binds_tightest(self):
        got = parse_term("{(t=a),(t=b)}'")
        assert got == Neg(Lit("rows", ("t",), (("a",), ("b",))))
        assert parse_term("x ^ y'") == Bin("^", Var("x"), Neg(Var("y")))

    def test_chain_associates_left(self):
        got = parse_term("x + y + z")
        assert got == Bin("+", Bin("+", Var("x"), Var("y")), Var("z"))

    def test_nested_parens_same_operator(self):
        got = parse_term("x ^ (y ^ z)")
        assert got == Bin("^", Var("x"), Bin("^", Var("y"), Var("z")))

    def test_double_complement(self):
        assert parse_term("x''") == Neg(Neg(Var("x")))

    def test_constants(self):
        assert parse_term("R10") == Const(ConstantKind.R10)

    def test_empty_full_literals(self):
        assert parse_term("empty(t,s)") == Lit("empty", ("t", "s"))
        assert parse_term("full()") == Lit("full", ())

    def test_zero_column_tuple(self):
        assert parse_term("{()}") == Lit("rows", (), ((),))

    def test_tuples_must_share_attributes(self):
        with pytest.raises(ParseError):
            parse_term("{(t=a),(s=1)}")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_term("x ^ ?")
        assert err.value.pos == 4

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_term("   ")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_term("x y")

    def test_v_is_an_operator_not_a_variable(self):
        with pytest.raises(ParseError):
            parse_term("v ^ x")


class TestParseStatement:
    def test_equation(self):
        assert parse_statement("x ^ y = y ^ x") == Eq(
            Bin("^", Var("x"), Var("y")), Bin("^", Var("y"), Var("x"))
        )

    def test_complement_axiom(self):
        got = parse_statement("x' ^ x = x ^ R00")
        assert got == Eq(Bin("^", Neg(Var("x")), Var("x")),
                         Bin("^", Var("x"), Const(ConstantKind.R00)))

    def test_implication(self):
        got = parse_statement("R00 ^ y = R00 ^ z -> x ^ (y v z) = (x ^ y) v (x ^ z)")
        assert isinstance(got, Imp)
        assert len(got.premises) == 1

    def test_inequation_and_order(self):
        assert isinstance(parse_statement("x != y"), Ne)
        assert isinstance(parse_statement("x < y"), Lt)

    def test_multi_premise(self):
        got = parse_statement("x = y & y = z -> x = z")
        assert isinstance(got, Imp) and len(got.premises) == 2

    def test_dangling_ampersand(self):
        with pytest.raises(ParseError):
            parse_statement("x = y & y = z")

    def test_no_nested_implication(self):
        with pytest.raises(ParseError):
            parse_statement("x = y -> y = z -> x = z")


class TestParseGoal:
    def test_disjunction(self):
        got = parse_goal("x v R00 = R00 | x v R00 = R00'")
        assert isinstance(got, Or) and len(got.alts) == 2

    def test_plain_statement_passes_through(self):
        assert isinstance(parse_goal("x = y"), Eq)

    def test_statement_parser_rejects_disjunction(self):
        with pytest.raises(ParseError):
            parse_statement("x = y | x = z")

    def test_no_disjunction_of_implication(self):
        with pytest.raises(ParseError):
            parse_goal("x = y -> y = z | x = z")


class TestFreeVariables:
    def test_first_appearance_order(self):
        assert free_variables(parse_statement("x ^ y = y ^ x")) == ("x", "y")

    def test_single(self):
        assert free_variables(parse_statement("x ^ R10 = R10")) == ("x",)

    def test_conditional(self):
        sdc = parse_statement("R00 ^ (x v y) = R00 ^ (x v z) -> x ^ (y v z) = (x ^ y) v (x ^ z)")
        assert free_variables(sdc) == ("x", "y", "z")


class TestStatementFiles:
    def test_comments_and_blanks(self):
        text = "# a comment\n\nx = y\nx ^ y = y ^ x  # trailing\n"
        got = parse_statement_file(text)
        assert len(got) == 2

    def test_error_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_statement_file("x = y\nx ^^ y = y\n")
        assert "line 2" in str(err.value)


# ---- round-trip property -----------------------------------------------------

attr_names = st.sampled_from(["t", "s", "u0", "ab"])
values = st.sampled_from(["a", "b", "1", "2", "x1"])


@st.composite
def literals(draw):
    shape = draw(st.sampled_from(["rows", "empty", "full"]))
    attrs = tuple(draw(st.lists(attr_names, unique=True, max_size=2)))
    if shape != "rows":
        return Lit(shape, attrs)
    nrows = draw(st.integers(min_value=1, max_value=2))
    rows = tuple(
        tuple(draw(values) for _ in attrs) for _ in range(nrows)
    )
    return Lit("rows", attrs, rows)


def terms_strategy():
    base = st.one_of(
        st.sampled_from([Var("x"), Var("y"), Var("z"), Var("r")]),
        st.sampled_from([Const(k) for k in ConstantKind]),
        literals(),
    )
    return st.recursive(
        base,
        lambda children: st.one_of(
            children.map(Neg),
            st.tuples(st.sampled_from(["^", "v", "*", "+", "@"]), children, children)
            .map(lambda t: Bin(*t)),
        ),
        max_leaves=12,
    )


@st.composite
def statements(draw):
    atom = st.builds(
        draw(st.sampled_from([Eq, Ne, Lt])), terms_strategy(), terms_strategy()
    )
    kind = draw(st.integers(min_value=0, max_value=2))
    if kind == 0:
        return draw(atom)
    if kind == 1:
        prems = tuple(draw(st.lists(atom, min_size=1, max_size=3)))
        return Imp(prems, draw(atom))
    return Or(tuple(draw(st.lists(atom, min_size=2, max_size=3))))


class TestRoundTrip:
    @settings(max_examples=300, deadline=None)
    @given(terms_strategy())
    def test_terms(self, t):
        assert parse_term(format_term(t)) == t

    @settings(max_examples=200, deadline=None)
    @given(statements())
    def test_statements(self, s):
        text = format_statement(s)
        reparsed = parse_goal(text) if isinstance(s, Or) else parse_statement(text)
        assert reparsed == s


class TestFormatRelation:
    def test_empty_relation_literal(self, u1):
        assert format_relation(u1.relation(["t"], [])) == "empty(t)"

    def test_rows_literal(self, u2):
        r = u2.relation(["t", "s"], [["a", "1"], ["b", "2"]])
        assert format_relation(r) == "{(t=a,s=1),(t=b,s=2)}"

    def test_r01_prints_as_empty_tuple(self, u1):
        from rlattice import ConstantKind, constant
        assert format_relation(constant(u1, ConstantKind.R01)) == "{()}"

    def test_roundtrip_through_parser(self, u2, rels2):
        from rlattice import evaluate
        for r in rels2:
            lit = parse_term(format_relation(r))
            assert evaluate(u2, lit, {}) == r
