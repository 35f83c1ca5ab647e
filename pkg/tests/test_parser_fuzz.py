from artin_rinf.graph import GraphError, ParseError, parse_graph
from fuzz import fuzz_cases


def test_fuzz_only_structured_errors():
    parsed = rejected = 0
    for text in fuzz_cases():
        try:
            g = parse_graph(text)
        except GraphError as exc:
            rejected += 1
            if isinstance(exc, ParseError):
                assert exc.line >= 1 and exc.column >= 1
            continue
        parsed += 1
        assert parse_graph(g.to_dsl()) == g
    assert parsed + rejected == 10_000
    assert parsed and rejected
