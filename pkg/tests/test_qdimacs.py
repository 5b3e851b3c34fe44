import io

import pytest

from qbfredux import gen_phi_c, gen_phi_l, gen_quparity, preprocess, PreprocessConfig, Mode
from qbfredux.formula import Quantifier
from qbfredux.qdimacs import (
    EventKind,
    ParseError,
    TraceEvent,
    parse_qdimacs,
    replay_trace,
    write_qdimacs,
    write_trace,
)

EX1_TEXT = "p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 -2 -3 0\n"


def test_parse_example():
    f, diag = parse_qdimacs(EX1_TEXT)
    assert [(b.quantifier, b.variables) for b in f.prefix.blocks] == [
        (Quantifier.EXISTS, (1,)),
        (Quantifier.FORALL, (2,)),
        (Quantifier.EXISTS, (3,)),
    ]
    assert list(f) == [(1, 2, 3), (-1, -2, -3)]
    assert diag.warnings == []


def test_parse_drops_tautology():
    f, diag = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 -1 2 0\n2 0\n")
    assert list(f) == [(2,)]
    assert diag.dropped_tautologies == 1
    assert diag.warnings


def test_parse_binds_free_variables():
    f, diag = parse_qdimacs("p cnf 2 1\n1 2 0\n")
    assert [(b.quantifier, b.variables) for b in f.prefix.blocks] == [(Quantifier.EXISTS, (1, 2))]
    assert diag.freed_variables_bound == 2


def test_parse_free_variables_go_outermost():
    f, diag = parse_qdimacs("p cnf 3 1\na 1 0\ne 2 0\n1 2 3 0\n")
    assert f.prefix.level_of(3) == 1
    assert f.prefix.level_of(1) == 2
    assert diag.freed_variables_bound == 1


def test_parse_normalizes():
    text = "c comment\np cnf 5 2\na 2 0\na 1 0\ne 5 3 0\n3 3 1\n -5 0 4 0\n"
    f, diag = parse_qdimacs(text)
    assert [(b.quantifier, b.variables) for b in f.prefix.blocks] == [
        (Quantifier.EXISTS, (4,)),
        (Quantifier.FORALL, (1, 2)),
        (Quantifier.EXISTS, (3, 5)),
    ]
    assert list(f) == [(1, 3, -5), (4,)]
    assert diag.merged_duplicate_literals == 1


def test_clause_count_mismatch_is_warning():
    f, diag = parse_qdimacs("p cnf 1 3\ne 1 0\n1 0\n")
    assert len(f) == 1
    assert any("declares 3" in msg for _, msg in diag.warnings)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p cnf x 1\n", 1),
        ("p dnf 1 1\n", 1),
        ("1 0\n", 1),
        ("p cnf 3 1\ne 1 0 2 0\n", 2),
        ("p cnf 3 1\ne 1 2\n", 2),
        ("p cnf 3 1\ne 1 0\n1 2\n", 3),
        ("p cnf 2 1\ne 1 0\n1 3 0\n", 3),
        ("p cnf 2 1\ne 3 0\n", 2),
        ("p cnf 2 1\ne 1 0\na 1 0\n", 3),
        ("p cnf 2 1\n1 0\ne 1 0\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_qdimacs(text)
    assert info.value.line == line


def test_round_trip_literal_for_literal():
    assert write_qdimacs(parse_qdimacs(EX1_TEXT)[0]) == EX1_TEXT


@pytest.mark.parametrize("f", [gen_phi_c(3), gen_phi_l(2), gen_quparity(4)])
def test_parse_write_parse(f):
    text = write_qdimacs(f)
    g, _ = parse_qdimacs(text)
    assert g == f
    assert write_qdimacs(g) == text


def test_parse_accepts_stream():
    f, _ = parse_qdimacs(io.StringIO(EX1_TEXT))
    assert len(f) == 2


def test_write_empty_cnf():
    f, _ = parse_qdimacs("p cnf 3 0\ne 1 0\na 2 0\ne 3 0\n")
    assert write_qdimacs(f) == "p cnf 3 0\ne 1 0\na 2 0\ne 3 0\n"


def test_write_empty_clause():
    f, _ = parse_qdimacs("p cnf 1 1\ne 1 0\n0\n")
    assert write_qdimacs(f).splitlines()[-1] == "0"
    assert f.has_empty_clause


def test_trace_clause_deletion():
    event = TraceEvent(EventKind.CLAUSE_DELETED, 1, (1, 3, -5), Mode.QRATPLUS)
    assert write_trace([event]) == "d 1 3 -5 0\n"


def test_trace_witness_first():
    event = TraceEvent(EventKind.CLAUSE_DELETED, -5, (1, 3, -5), Mode.QRAT)
    assert event.line() == "d -5 1 3 0"


def test_trace_witness_free_deletion():
    event = TraceEvent(EventKind.CLAUSE_DELETED, None, (1, 3, -5), Mode.QRATPLUS)
    assert event.line() == "d 1 3 -5 0"


def test_trace_universal_literal():
    event = TraceEvent(EventKind.UNIVERSAL_LITERAL_DELETED, -2, (-2, -3, -4), Mode.QRATPLUS)
    assert write_trace([event]) == "u -2 -3 -4 0\n"


def test_trace_empty():
    assert write_trace([]) == ""


def test_trace_event_validation():
    with pytest.raises(ValueError):
        TraceEvent(EventKind.CLAUSE_DELETED, 2, (1, 3), Mode.QRAT)
    with pytest.raises(ValueError):
        TraceEvent(EventKind.UNIVERSAL_LITERAL_DELETED, None, (1, 3), Mode.QRAT)


@pytest.mark.parametrize("make, qrate, qratu", [(gen_phi_c, True, False), (gen_phi_l, False, True)])
def test_replay_reproduces_output(make, qrate, qratu):
    f = make(2)
    g, trace, _ = preprocess(f, PreprocessConfig(mode=Mode.QRATPLUS, enable_qrate=qrate, enable_qratu=qratu))
    assert replay_trace(f, write_trace(trace)) == g


def test_replay_rejects_unknown_clause():
    f, _ = parse_qdimacs(EX1_TEXT)
    with pytest.raises(ParseError):
        replay_trace(f, "d 1 0\n")
