"""Smoke tests for the python bindings."""

import json

import pytest

import cubicsym


NORMAL_FORMS = {
    "SmoothElliptic": "z0^3 + z1^3 + z2^3",
    "Nodal": "-z0^3 - z0^2*z2 + z1^2*z2",
    "Cuspidal": "-z0^3 + z1^2*z2",
    "ConicLineGeneral": "z0^2*z2 + z1^2*z2 - z2^3",
    "ConicLineTangent": "(z1 - z2)*(z0^2 + z1^2 - z2^2)",
    "ThreeLinesGeneral": "z0*z1*z2",
    "ThreeLinesConcurrent": "z0*z1*(z0 + z1)",
    "DoubleLinePlusLine": "z0^2*z1",
    "TripleLine": "z0^3",
}


def test_version():
    assert cubicsym.__version__ == "0.1.0"


def test_render_is_canonical():
    assert cubicsym.render("z0*z1*(z0+z1)") == "z0^2*z1 + z0*z1^2"
    assert cubicsym.render("z2^3 - z0*z1*z2") == "-z0*z1*z2 + z2^3"


def test_classify_all_normal_forms():
    for tag, expr in NORMAL_FORMS.items():
        assert cubicsym.classify(expr) == tag


def test_normal_forms_listing_round_trips():
    forms = cubicsym.normal_forms()
    assert len(forms) == 9
    assert forms[0]["figure"] == 1
    for record in forms:
        assert cubicsym.classify(record["f"]) == record["curve_type"]


def test_annihilator_dimensions():
    assert cubicsym.annihilator_dimension("z0^3", "strict") == 5
    assert cubicsym.annihilator_dimension("z0^3", "divisor") == 6
    assert cubicsym.annihilator_dimension("z0*z1*z2", "strict") == 2
    basis = cubicsym.annihilator_basis("z0*z1*(z0+z1)", "strict")
    assert len(basis) == 2
    assert all(len(m) == 3 and len(m[0]) == 3 for m in basis)


def test_reductivity_verdicts():
    assert cubicsym.is_reductive("z0*z1*z2", "strict")
    assert not cubicsym.is_reductive("z0^3", "strict")
    assert not cubicsym.is_reductive("z0*z1*(z0 + z1)", "divisor")
    assert cubicsym.is_reductive("z0*z1*(z0 + z1)", "strict")


def test_analyze_report_shape_and_determinism():
    report = cubicsym.analyze("z0^3")
    assert report["curve_type"] == "TripleLine"
    assert report["modes"]["strict"]["dimension"] == 5
    assert report["modes"]["strict"]["obstruction"] == "obstructed"
    assert report["modes"]["strict"]["radical"]["dimension"] == 2
    assert cubicsym.analyze_json("z0^3") == cubicsym.analyze_json("z0^3")

    strict_only = cubicsym.analyze("z0^3", mode="strict")
    assert strict_only["obstruction"] == "obstructed"
    assert "divisor" not in strict_only["modes"]

    text = cubicsym.analyze_text("z0*z1*z2")
    assert "curve type: ThreeLinesGeneral" in text


def test_classify_info():
    info = cubicsym.classify_info("z0^2*z1")
    assert info["curve_type"] == "DoubleLinePlusLine"
    assert info["singular"]["singular_count"] == "infinite"
    info = cubicsym.classify_info("z0*z1*z2")
    assert info["singular"]["singular_count"] == 3


def test_act():
    assert cubicsym.act([["0", "0", "0"], ["0", "0", "0"], ["1", "0", "0"]],
                        "z0^3") == "0"
    # pullback convention: diag weights enter negated
    assert cubicsym.act([["1", "0", "0"], ["0", "0", "0"], ["0", "0", "-1"]],
                        "z0^3") == "-3*z0^3"


def test_type_number():
    assert cubicsym.type_number("z0^3", "0", "1", "0") == 2
    assert cubicsym.type_number("z0^3", "1", "1", "1") == 0
    assert cubicsym.type_number("z0^3", "0", "1/2", "-3") == 2


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        cubicsym.classify("z0 + +")
    with pytest.raises(ValueError):
        cubicsym.classify("z0 + z1")  # wrong degree
    with pytest.raises(ValueError):
        cubicsym.analyze("z0^3", mode="sloppy")
    with pytest.raises(ValueError):
        cubicsym.type_number("z0^3", "0", "0", "0")


def test_json_string_is_valid_json():
    parsed = json.loads(cubicsym.analyze_json("z0*z1*z2"))
    assert parsed["input"] == "z0*z1*z2"
