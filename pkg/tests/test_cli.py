import json

import pytest

from stieltjes import DistSpec, Interval, MonotoneFn, identity_on, piecewise_linear, step
from stieltjes.cli import run


@pytest.fixture
def files(tmp_path):
    def put(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return {
        "id": put("id.json", identity_on(-1, 1).to_json()),
        "id02": put("id02.json", identity_on(0, 2).to_json()),
        "heaviside": put("heaviside.json", step(0, 0, "1/2", 1).to_json()),
        "sq": put("sq.json", piecewise_linear([(0, 0), (1, 1), (2, 4)]).to_json()),
        "coin": put("coin.json", {"atoms": [["0", "1/2"], ["1", "1/2"]], "pieces": []}),
        "bad": put("bad.json", {"breakpoints": ["0", "1"], "anchor": "0", "slopes": ["-1"]}),
        "garbage": put("garbage.json", "{nope"),
    }


def call(capsys, *argv):
    code = run(["--json" if a == "JSON" else a for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, err = call(capsys, *argv, "JSON")
    assert code == 0, err
    return json.loads(out)


def test_integrate_example(capsys, files):
    r = report(capsys, "integrate", "--f", files["id"], "--g", files["heaviside"], "--interval", "[-1,1]")
    assert r["value"] == "0"


def test_integrate_text_table(capsys, files):
    code, out, _ = call(capsys, "integrate", "--f", files["id"], "--g", files["heaviside"],
                        "--interval", "[-1,1]")
    assert code == 0 and out.split() == ["value", "0"]


def test_integrate_change_of_variables(capsys, files):
    r = report(capsys, "integrate", "--f", files["id"], "--g", files["id"], "--interval", "[0,1]",
               "--change-of-variables", "--version", "midpoint")
    assert r["lhs"] == r["rhs"] == "1/2" and r["agree"] is True


def test_parts(capsys, files):
    r = report(capsys, "parts", "--f", files["heaviside"], "--g", files["heaviside"], "--interval", "[-1,1]")
    assert (r["lhs"], r["boundary"], r["jump_sum"], r["holds"]) == ("1", "1", "0", True)


def test_invert(capsys, files):
    r = report(capsys, "invert", "--g", files["heaviside"], "--y", "1/2", "--version", "largest")
    assert r["value"] == "0"
    r = report(capsys, "invert", "--g", files["heaviside"], "--materialize")
    assert MonotoneFn.from_json(r["inverse"]).slopes == (0,)


def test_measure(capsys, files):
    r = report(capsys, "measure", "--g", files["heaviside"], "--interval", "{0}")
    assert r["measure"] == "1" and r["atoms"] == [["0", "1"]]


def test_young_forms(capsys, files):
    r = report(capsys, "young", "--f", files["id02"], "--g", files["id02"], "--a", "0", "--s", "1", "--t", "2")
    assert r["lower"] <= r["value"] and r["holds"]
    r = report(capsys, "young", "--f", files["id02"], "--g", files["id02"], "--a", "0", "--s", "1",
               "--t", "2", "--form", "s")
    assert (r["value"], r["lower"], r["upper"]) == ("5/2", "2", "3")
    r = report(capsys, "young", "--f", files["id02"], "--a", "0", "--s", "1", "--t", "2", "--form", "classical")
    assert (r["minguzzi"], r["merkle"]) == ("3", "4")
    r = report(capsys, "young", "--f", files["id"], "--g", files["id"], "--I", "[0,1]", "--J", "[0,1/2]")
    assert r["holds"]


def test_prob(capsys, files):
    assert report(capsys, "prob", "expected-cdf", "--dist", files["coin"])["integral"] == "3/4"
    r = report(capsys, "prob", "median", "--dist", files["coin"])
    assert (r["lo"], r["hi"]) == ("0", "1")
    r = report(capsys, "prob", "median-bound", "--dist", files["coin"])
    assert r["bound"] == "1" and r["holds"]
    r = report(capsys, "prob", "measure-young", "--dist", files["coin"], "--f", files["heaviside"],
               "--s", "0", "--t", "1")
    assert r["holds"]
    r = report(capsys, "prob", "cdf", "--dist", files["coin"])
    assert len(r["cdf"]["jumps"]) == 2


def test_sumform_example(capsys, files):
    r = report(capsys, "sumform", "--f", files["sq"], "--m", "1", "--n", "2")
    assert (r["lhs"], r["rhs"], r["K"]) == (10, 10, 2)
    r = report(capsys, "sumform", "--f", files["sq"], "--n", "2", "--gupta")
    assert r["holds"]


def test_inline_json(capsys):
    f = json.dumps(identity_on(0, 1).to_json())
    r = report(capsys, "integrate", "--f", f, "--g", f, "--interval", "[0,1]")
    assert r["value"] == "1/2"


def test_inputs_round_trip(capsys, files):
    r = report(capsys, "parts", "--f", files["sq"], "--g", files["heaviside"], "--interval", "(0,inf)")
    assert MonotoneFn.from_json(r["inputs"]["f"]) == MonotoneFn.from_json(json.load(open(files["sq"])))
    assert Interval.parse(r["inputs"]["interval"]) == Interval.parse("(0,inf)")
    r = report(capsys, "prob", "median", "--dist", files["coin"])
    assert DistSpec.from_json(r["inputs"]["dist"]) == DistSpec.from_json(json.load(open(files["coin"])))


@pytest.mark.parametrize("argv", [
    ["young", "--f", "{id}", "--g", "{id}", "--a", "0", "--s", "2", "--t", "1"],
    ["young", "--f", "{id}", "--g", "{id}", "--I", "[0,1]", "--J", "[0,2]"],
    ["parts", "--f", "{id}", "--g", "{id}", "--interval", "empty"],
    ["invert", "--g", "{id}", "--y", "5"],
    ["sumform", "--f", "{heaviside}", "--n", "2"],
    ["prob", "measure-young", "--dist", "{coin}", "--f", "{id}", "--s", "1", "--t", "0"],
])
def test_exit_one_on_precondition(capsys, files, argv):
    code, out, err = call(capsys, *[a.format(**files) for a in argv])
    assert code == 1 and "precondition" in err and out == ""


@pytest.mark.parametrize("argv, field", [
    (["integrate", "--f", "{bad}", "--g", "{id}", "--interval", "[0,1]"], "--f"),
    (["integrate", "--f", "{id}", "--g", "{garbage}", "--interval", "[0,1]"], "--g"),
    (["integrate", "--f", "{id}", "--g", "{id}", "--interval", "[0,1"], "--interval"),
    (["measure", "--g", "{id}", "--interval", "[0,x]"], "--interval"),
    (["invert", "--g", "{id}", "--y", "0.5"], "--y"),
    (["sumform", "--f", "{sq}", "--n", "two"], "--n"),
    (["integrate", "--f", "/nonexistent.json", "--g", "{id}", "--interval", "[0,1]"], "--f"),
    (["prob", "median", "--dist", "{id}"], "--dist"),
])
def test_exit_two_on_parse_error(capsys, files, argv, field):
    code, _, err = call(capsys, *[a.format(**files) for a in argv])
    assert code == 2 and field in err


def test_exit_two_on_usage(capsys):
    assert call(capsys, "integrate")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2


def test_verify(capsys, monkeypatch):
    monkeypatch.setenv("STIELTJES_SEED", "5")
    r = report(capsys, "verify", "--instances", "4", "--levels", "5", "--grid", "64")
    assert r["seed"] == 5 and r["ok"] is True and len(r["convergence"]) == 5
    code, out, _ = call(capsys, "verify", "--instances", "2", "--levels", "3", "--seed", "1")
    assert code == 0 and "gap_bounded: PASS" in out
