from __future__ import annotations

import io

import pytest
from hypothesis import given

from trigraphs.generators import random_trigraph
from trigraphs.triformat import TriFormatError, format_tri, parse_tri, read_tri, write_tri

from conftest import trigraphs


def test_parse_example():
    g = parse_tri("trigraph 4\n# a comment\n0 1 +\n1 2 0\n\n")
    assert g.n == 4
    assert g.value(0, 1) == 1 and g.value(1, 2) == 0 and g.value(2, 3) == -1


@given(trigraphs(max_n=8))
def test_round_trip(g):
    assert parse_tri(format_tri(g)) == g


def test_round_trip_through_streams():
    g = random_trigraph(7, 0.3, 0.3, seed=5)
    buf = io.StringIO()
    write_tri(g, buf)
    buf.seek(0)
    assert read_tri(buf) == g


@pytest.mark.parametrize("text", [
    "",
    "graph 3\n",
    "trigraph x\n",
    "trigraph 3\n0 1\n",
    "trigraph 3\n0 0 +\n",
    "trigraph 3\n0 5 +\n",
    "trigraph 3\n0 1 ?\n",
    "trigraph 3\n0 1 +\n1 0 -\n",
])
def test_malformed(text):
    with pytest.raises(TriFormatError):
        parse_tri(text)
