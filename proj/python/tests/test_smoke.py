from fractions import Fraction

import zgu


def test_theorem_a_ranks():
    report = zgu.run_json("theorem-a", "--group", "s3", "--p", "3")
    assert report["verdict"] == "Excluded"
    diff = [s for s in report["certificate"] if s["formula"] == "rank_difference"]
    assert diff and diff[0]["value"] == ["8", "3"]
    assert diff[0]["integral"] is False


def test_help_order_two_on_a7():
    result = zgu.run_json("help", "--group", "a7", "--order", "2")
    assert result["complete"] is True
    assert result["solutions"] == [{"u^1": {"2a": 1}}]


def test_example_a7():
    doc = zgu.run_json("example-a7")
    assert [r["verdict"] for r in doc["reports"]] == ["Identified", "NotExcluded", "Excluded", "Excluded"]


def test_input_error_exit_code():
    code, out, err = zgu.run("help", "--group", "s3", "--order", "nope")
    assert code == zgu.EXIT_INPUT_ERROR
    assert out == ""
    assert err


def test_cyclotomic_binding():
    z = zgu.Cyclotomic.zeta(7, 1)
    s = z + zgu.Cyclotomic.zeta(7, 2) + zgu.Cyclotomic.zeta(7, 4)
    assert str(s * s + s) == "-2"
    assert (s * s + s).as_fraction() == -2
    assert zgu.elementary_abelian_rank([2, -1, -1], 3) == Fraction(-2, 3)


def test_missing_group_raises():
    try:
        zgu.run_json("classes", "--group", "/nonexistent.json")
    except zgu.ZguError as exc:
        assert "ParseError" in str(exc) or "not found" in str(exc).lower()
    else:
        raise AssertionError("expected ZguError")
