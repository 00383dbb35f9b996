import io
import json
import subprocess
import sys

import pytest

from borelseg.cli import COMMANDS, parse, render, run

from dotcheck import parse as parse_dot

SEVEN = "x3^2, x2*x3, x2^2, x1^2*x3, x1^2*x2, x1^3"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def lines(text):
    return [ln.rstrip() for ln in text.rstrip().splitlines()]


GOLDENS = [
    (["gotzmann", "-p", "6z-3"], "r = 12"),
    (["gotzmann", "-p", "7z+1"], "r = 22"),
    (["gotzmann", "-p", "3z+1", "-v"], "r = 4\na = 1, 1, 1, 0\nm = 4, 3"),
    (["enumerate", "-n", "2", "-p", "5"],
     "p = 5, n = 2, r = 5: 3 ideals\n(x2, x1^5)\n(x2^2, x1*x2, x1^4)\n(x2^2, x1^2*x2, x1^3)"),
    (["enumerate", "-n", "2", "-p", "3", "--format", "json"],
     '{"polynomial":"3","n":2,"gotzmann":3,"count":2,"ideals":[{"n":2,"generators":[[0,0,1],[0,3,0]]},'
     '{"n":2,"generators":[[0,0,2],[0,1,1],[0,2,0]]}]}'),
    (["classify", "x2^2, x1*x2", "-n", "2", "--order", "revlex", "--json"],
     '{"order":"revlex","segment":false,"hilb":true,"reg":true,"gen":true,"gotzmann":2,"regularity":2,"witness":null}'),
    (["classify", "x2^2, x1*x2", "-n", "2", "--order", "revlex"],
     "order       revlex\nsegment     no\nhilb        yes\nreg         yes\ngen         yes\ngotzmann    2\nregularity  2"),
    (["hilbert", "x2^2, x1*x2"], "p = z+2\nreg = 2\nH = 1, 3, 4, 5, 6, ..."),
    (["stratum", SEVEN, "--order", "revlex", "--truncate", "auto", "--ed-only"], "27"),
    (["witness", "x2^2, x1^3*x2, x1^4", "--from", "7", "--to", "7"],
     "t = 7: x0^5*x2^2 * x0^3*x1^4 = x0^4*x1^2*x2 * x0^4*x1^2*x2"),
    (["witness", "x2, x1^4"], "no witness"),
    (["enumerate", "-n", "2", "-p", "6", "--classify", "revlex"],
     "p = 6, n = 2, r = 6: 4 ideals\n(x2, x1^6)  [gen]\n(x2^2, x1*x2, x1^5)  [gen]\n"
     "(x2^2, x1^2*x2, x1^4)  [gen]\n(x2^3, x1*x2^2, x1^2*x2, x1^3)  [segment hilb reg gen]"),
]


@pytest.mark.parametrize("argv,expected", GOLDENS)
def test_goldens(argv, expected):
    code, out, err = call(*argv)
    assert code == 0, err
    assert lines(out) == lines(expected)


def test_stratum_singularity_report():
    code, out, _ = call("stratum", SEVEN, "--order", "revlex", "--truncate", "auto", "--singularity")
    assert code == 0
    assert lines(out)[-4:] == ["vars = 91", "rank = 64", "ed = 27", "|G|*|B| = 18, nd = 21: singular (ed)"]
    code, out, _ = call("stratum", SEVEN, "--order", "revlex", "--truncate", "3", "--singularity", "--json")
    obj = json.loads(out)
    assert obj["ed"] == 27 and obj["truncation"] == 3
    assert obj["certificate"]["verdict"] == "singular" and obj["certificate"]["product"] == 18
    assert obj["B"] == ["x0^5*x1*x2", "x0^5*x1*x3", "x0^5*x1^2"]


def test_json_outputs_parse():
    for argv in (["hilbert", "x2, x1^3", "--json"], ["gotzmann", "-p", "2z^2+2z+1", "--json"],
                 ["witness", "x2^3, x1^3*x2^2, x1^5*x2, x1^6", "--json"],
                 ["enumerate", "-n", "2", "-p", "4", "--format", "json", "--classify", "lex"]):
        code, out, _ = call(*argv)
        assert code == 0
        json.loads(out)
    _, out, _ = call("gotzmann", "-p", "2z^2+2z+1", "--json")
    assert json.loads(out)["gotzmann"] == 12
    _, out, _ = call("witness", "x2^3, x1^3*x2^2, x1^5*x2, x1^6", "--from", "6", "--to", "6", "--json")
    w = json.loads(out)["witness"]
    assert {w["gamma"], w["delta"]} == {"x0^3*x2^3", "x1^6"}


def test_graph_is_valid_dot():
    code, out, _ = call("graph", "x3^2, x2*x3, x2^3", "-t", "3")
    assert code == 0
    nodes, _ = parse_dot(out)
    assert sum(a.get("shape") == "box" for a in nodes.values()) == 8


@pytest.mark.parametrize("argv,code", [
    (["gotzmann", "-p", "3z-7"], 1),
    (["enumerate", "-n", "1", "-p", "z+1"], 1),
    (["classify", "x3^2, x1*x3, x1^3"], 1),
    (["classify", "x2^2, x1*x2", "--order", "w:2,1"], 1),
    (["gotzmann", "-p", "6z-"], 2),
    (["classify", "x2, y3"], 2),
    (["classify", "x2", "--order", "deglex"], 2),
    (["stratum", "x2", "--order", "revlex", "--truncate", "many"], 2),
    (["nonsense"], 2),
    (["enumerate", "-p", "3"], 2),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    if code == 1:
        assert err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["enumerate", "-n", "3", "-p", "3z+1", "--format", "json", "--classify", "w:4,2,1,1", "--jobs", "2"],
    ["classify", "x2^2, x1*x2", "-n", "2", "--order", "lex", "--json"],
    ["hilbert", "x2", "--upto", "5"],
    ["gotzmann", "-p", "6z-3", "--verbose"],
    ["stratum", SEVEN, "--order", "revlex", "--truncate", "auto", "--ed-only", "--singularity", "--json"],
    ["graph", "x2, x1^3", "-t", "2"],
    ["witness", "x2^2, x1^3*x2, x1^4", "--from", "7", "--to", "8", "--json"],
])
def test_render_round_trip(argv):
    ns = parse(argv)
    assert parse(render(ns)) == ns


def test_every_command_has_a_handler():
    from borelseg.cli import HANDLERS

    assert set(COMMANDS) == set(HANDLERS)


def test_jobs_do_not_change_output():
    a = call("enumerate", "-n", "3", "-p", "3z+1")
    b = call("enumerate", "-n", "3", "-p", "3z+1", "--jobs", "3")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "borelseg", "gotzmann", "-p", "6z-3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "r = 12"
    proc = subprocess.run([sys.executable, "-m", "borelseg", "gotzmann", "-p", "3z-7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
