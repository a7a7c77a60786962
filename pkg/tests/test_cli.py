"""CLI tests: parse/print round trips and golden-file determinism."""

import io
import pathlib
from contextlib import redirect_stderr, redirect_stdout

import pytest

from altbialg.cli import main, parse, print_document

GOLDEN = pathlib.Path(__file__).parent / "golden"

RUNS = [
    ("aybe", ["check", "aybe.alt"], "txt", 0),
    ("aybe", ["check", "aybe.alt", "--format", "structured"], "rec", 0),
    ("octonion", ["check", "octonion.alt"], "txt", 1),
    ("octonion", ["check", "octonion.alt", "--format", "structured"], "rec", 1),
    ("extending", ["check", "extending.alt"], "txt", 0),
    ("classify", ["classify", "classify.alt", "--grid", "0,1"], "txt", 0),
    ("coalt", ["check", "coalt.alt"], "txt", 0),
    ("coalt", ["check", "coalt.alt", "--format", "structured"], "rec", 0),
]


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main([argv[0], str(GOLDEN / argv[1])] + argv[2:])
    return out.getvalue(), err.getvalue(), code


@pytest.mark.parametrize("name,argv,ext,want_code",
                         RUNS, ids=[f"{n}-{e}" for n, _, e, _ in RUNS])
def test_golden_output(name, argv, ext, want_code):
    out, err, code = _run(argv)
    assert code == want_code
    assert err == ""
    assert out == (GOLDEN / f"{name}.{ext}").read_text()


@pytest.mark.parametrize("name,argv,ext,want_code",
                         [r for r in RUNS if r[2] == "txt"],
                         ids=[n for n, _, e, _ in RUNS if e == "txt"])
def test_golden_output_is_deterministic(name, argv, ext, want_code):
    assert _run(argv) == _run(argv)


def test_syntax_error_exits_2():
    out, err, code = _run(["check", "broken.alt"])
    assert code == 2
    assert out == ""
    assert err == (GOLDEN / "broken.err").read_text()


def test_missing_file_exits_2():
    out, err, code = _run(["check", "no-such-file.alt"])
    assert code == 2 and "error:" in err


def test_verb_gate_exits_2():
    # a document with only check jobs run under `construct`
    out, err, code = _run(["construct", "coalt.alt"])
    assert code == 2 and "construct" in err


def test_parse_print_roundtrip_all_documents():
    for path in sorted(GOLDEN.glob("*.alt")):
        if path.name == "broken.alt":
            continue
        doc = parse(path.read_text())
        printed = print_document(doc)
        assert parse(printed) == doc
        # printing is idempotent
        assert print_document(parse(printed)) == printed
