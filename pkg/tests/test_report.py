import json
import re
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import disk_points, words
from wallcross.chambers import ORIGIN, ChamberPoint, enumerate_walls, poincare_to_hyperboloid
from wallcross.crossing import CrossingReport, InvariantExpression, separation_crossings
from wallcross.errors import NonGenericPoint, OutsideDisk
from wallcross.lattice import SIGMA_MINUS, SIGMA_PLUS, CoefficientRing, Isometry, LatticeClass, compose_word
from wallcross.report.cli import main, parse_word
from wallcross.report.figure import FigureSpec, reference_figure_spec, render_figure
from wallcross.report.serialize import emit_json, load_expression, load_report, load_walls
from wallcross.report.verify import default_fixtures, invariant_fixture, run_verify

F0 = compose_word([SIGMA_MINUS, SIGMA_PLUS])


def count(svg, cls):
    return len(re.findall(rf'class="{cls}"', svg))


# --- JSON ------------------------------------------------------------------


def test_empty_report_json():
    text = emit_json(separation_crossings(Isometry(), ORIGIN))
    assert text.startswith('{"crossings":[],"doubled_total":0,')
    assert '"gamma_dot_W":0' in text


def test_origin_report_json():
    data = json.loads(emit_json(separation_crossings(F0, ORIGIN)))
    assert data["gamma_dot_W"] == -2
    assert len(data["crossings"]) == 2
    assert data["end"] == {"x": "4", "y": "8", "z": "9"}


def test_walls_json_sorted():
    walls = enumerate_walls(3)
    text = emit_json(list(reversed(walls)))
    assert load_walls(text) == walls
    assert json.loads(text)[0] == {"a": -1, "b": -1, "c": 1, "eps": 1}


def test_fraction_strings():
    p = poincare_to_hyperboloid(Fraction(1, 3), Fraction(1, 5))
    data = json.loads(emit_json(p))
    assert ChamberPoint(*(Fraction(data[k]) for k in "xyz")) == p


@settings(max_examples=50, deadline=None)
@given(words, disk_points())
def test_report_round_trip(word, uv):
    try:
        report = separation_crossings(compose_word(word), poincare_to_hyperboloid(*uv))
    except NonGenericPoint:
        return
    text = emit_json(report)
    assert load_report(text) == report
    assert emit_json(load_report(text)) == text


def test_expression_round_trip():
    e = InvariantExpression({"X1": -4, "X0": 4})
    assert load_expression(emit_json(e)) == e
    z2 = InvariantExpression({"X0": 1}, CoefficientRing.Z2)
    assert load_expression(emit_json(z2)) == z2


# --- figure ----------------------------------------------------------------


def test_figure_counts():
    spec = FigureSpec(
        wall_c_max=3,
        points=(("+", (0, 0)), ("o", (Fraction(-1, 2), Fraction(-1, 2)))),
        words=((SIGMA_MINUS, SIGMA_PLUS),),
    )
    svg = render_figure(spec)
    assert count(svg, "wall") == 12
    assert count(svg, "point") == 4
    assert count(svg, "path") == 2
    assert count(svg, "crossing") == 6


def test_figure_walls_only():
    svg = render_figure(FigureSpec(wall_c_max=3))
    assert count(svg, "wall") == 12
    assert count(svg, "point") == count(svg, "path") == count(svg, "crossing") == 0


def test_figure_includes_far_wall():
    svg = render_figure(reference_figure_spec(13))
    assert 'data-wall="W(7,11,13)"' in svg
    assert "W(7,11,13)</text>" in svg


def test_figure_is_byte_stable():
    assert render_figure(reference_figure_spec()) == render_figure(reference_figure_spec())


def test_figure_arc_geometry():
    # W(1,1,1): ideal points (1, 0) and (0, 1), arc radius 1 in disk units
    svg = render_figure(FigureSpec(wall_c_max=1))
    arc = re.search(r'data-wall="W\(1,1,1\)" d="M (\S+) (\S+) A (\S+) (\S+) 0 0 (\d) (\S+) (\S+)"', svg)
    x1, y1, rx, _, _, x2, y2 = arc.groups()
    assert {(x1, y1), (x2, y2)} == {("580.000000", "300.000000"), ("300.000000", "20.000000")}
    assert rx == "280.000000"


def test_figure_rejects_outside_point():
    with pytest.raises(OutsideDisk):
        FigureSpec(points=(("bad", (1, 0)),))


# --- verify ----------------------------------------------------------------


def test_verify_all_pass():
    results = run_verify()
    assert results and all(r.passed for r in results), [r for r in results if not r.passed]
    names = [r.name for r in results]
    assert len(names) == len(set(names))


def test_verify_is_deterministic():
    a = [(r.name, r.actual) for r in run_verify(only="[1-5].*")]
    b = [(r.name, r.actual) for r in run_verify(only="[1-5].*")]
    assert a == b


def test_verify_inverted_word_fails():
    fx = invariant_fixture("inverted", [SIGMA_PLUS, SIGMA_MINUS], ORIGIN, "X0", {"ring": "Z", "terms": {"X0": -4}})
    (result,) = run_verify(fixtures=[fx])
    assert not result.passed
    assert json.loads(result.actual) == {"ring": "Z", "terms": {"X0": 4}}


def test_verify_filter():
    assert run_verify(only="nonexistent") == []
    assert [r.name for r in run_verify(only="3.D_Z(f0)")] == ["3.D_Z(f0)"]


def test_every_criterion_has_fixtures():
    prefixes = {fx.name.split(".")[0] for fx in default_fixtures()}
    assert prefixes == {str(i) for i in range(1, 12)}


# --- CLI -------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_word():
    assert parse_word("-,+") == [SIGMA_MINUS, SIGMA_PLUS]
    assert parse_word("+,1,-1,1,-") == [SIGMA_PLUS, LatticeClass(1, -1, 1), SIGMA_MINUS]
    assert parse_word("(1,-1,1), (-1,-1,1)") == [LatticeClass(1, -1, 1), LatticeClass(-1, -1, 1)]
    assert parse_word("") == []


def test_cli_walls(capsys):
    code, out, _ = run_cli(capsys, "walls", "--c-max", "3", "--json")
    assert code == 0
    assert len(json.loads(out)) == 12


def test_cli_walls_orientation(capsys):
    _, out, _ = run_cli(capsys, "--homology-orientation", "-", "walls", "--c-max", "1", "--json")
    assert [w["eps"] for w in json.loads(out)] == [-1, 1, 1, -1]


def test_cli_invariant(capsys):
    code, out, _ = run_cli(
        capsys, "invariant", "--word", "-,+", "--start", "poincare:-1/2,-1/2", "--symbol", "X0", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["gamma_dot_W"] == -2
    assert data["doubled_contributions"] == [2, -2, -2, -2]
    assert data["ring"] == "Z"
    assert data["expression"] == {"ring": "Z", "terms": {"X0": -4}}
    assert [(c["wall"]["a"], c["wall"]["b"], c["wall"]["c"]) for c in data["crossings"]] == [
        (-1, -1, 1),
        (1, 1, 1),
        (1, 3, 3),
        (7, 11, 13),
    ]


def test_cli_invariant_flipped(capsys):
    _, out, _ = run_cli(capsys, "invariant", "--word", "-,+", "--homology-orientation", "-", "--json")
    assert json.loads(out)["gamma_dot_W"] == 2


def test_cli_invariant_text(capsys):
    code, out, _ = run_cli(capsys, "invariant")
    assert code == 0
    assert "gamma.W = -2" in out and "-4*D_X0" in out


def test_cli_reflect_and_diffeo(capsys):
    _, out, _ = run_cli(capsys, "reflect", "--sigma", "-", "--x", "0,0,1", "--json")
    assert json.loads(out)["image"] == [-2, 2, 3]
    _, out, _ = run_cli(capsys, "diffeo", "--word", "+,-", "--json")
    data = json.loads(out)
    assert data["image_of_c"] == [1, -3, -3]
    assert data["ring"] == "Z" and data["alpha"] == 1 and data["beta"] == 1
    _, out, _ = run_cli(capsys, "diffeo", "--word", "+", "--json")
    assert json.loads(out)["ring"] == "Z2"
    _, out, _ = run_cli(capsys, "diffeo", "--matrix", "1,-4,4,4,-7,8,4,-8,9", "--json")
    assert json.loads(out)["image_of_c"] == [1, 5, 5]


def test_cli_sw_and_dim(capsys):
    _, out, _ = run_cli(capsys, "sw", "--b-plus-x", "3", "--json")
    assert json.loads(out) == {"parity": 1, "ring": "Z2", "epsilon_parity": 1}
    _, out, _ = run_cli(capsys, "dim", "--p1", "-1", "--b-plus", "1", "--json")
    assert json.loads(out)["dimension"] == -4


def test_cli_figure_out(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, _, _ = run_cli(capsys, "figure", "--c-max", "3", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("<svg")


def test_cli_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "--only", "1.*")
    assert code == 0 and out.count("PASS") == 3
    code, out, _ = run_cli(capsys, "verify", "--only", "nonexistent", "--json")
    assert code == 0 and json.loads(out) == []


@pytest.mark.parametrize(
    "argv, label",
    [
        (["invariant", "--start", "hyperboloid:2,1/4,9/4"], "non-generic point"),
        (["invariant", "--start", "poincare:1,0"], "point outside the unit disk"),
        (["reflect", "--sigma", "0,0,1"], "not a (-1)-class"),
        (["diffeo", "--matrix", "0,1,0,1,0,0,0,0,1", "--c", "1,0,1"], "w2 not preserved"),
        (["diffeo", "--matrix", "1,1,0,0,1,0,0,0,1"], "invalid input"),
        (["sw", "--b-plus-x", "5"], "Rohlin constraint violated"),
    ],
)
def test_cli_invalid_input(capsys, argv, label):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith(f"error: {label}:")
