"""Command line round trips: curve files, verbs, exit codes, outputs."""

import json

import pytest

from conftest import cclose, seq_close
from cxbezier import CxBezier, RealBezier, cissoid
from cxbezier.cli import CurveFileError, load_curve, main, save_curve


def write_doc(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def complex_doc(polygon, weights):
    return {
        "kind": "complex",
        "polygon": [[z.real, z.imag] for z in map(complex, polygon)],
        "weights": [[w.real, w.imag] for w in map(complex, weights)],
    }


def real_doc(points, weights):
    return {"kind": "real", "polygon": [list(p) for p in points], "weights": list(weights)}


QUARTER_DOC = complex_doc((1, 1 + 1j, 1j), (1, 1, 2))
PARABOLA_DOC = complex_doc((1, 1 + 1j, 1j), (1, 1, 1))


def test_save_load_round_trip_is_bit_exact(tmp_path):
    curve = CxBezier((0.1 + 1j / 3, 5e-17 - 2.2j), (1.0, 0.7 - 0.30000000000000004j))
    path = tmp_path / "c.json"
    save_curve(str(path), curve)
    loaded = load_curve(str(path))
    assert loaded.polygon == curve.polygon
    assert loaded.weights == curve.weights


def test_save_load_real_curve(tmp_path):
    curve = RealBezier(((1, 0), (1, 1), (0, 1)), (1, 1, 2))
    path = tmp_path / "r.json"
    save_curve(str(path), curve)
    loaded = load_curve(str(path))
    assert isinstance(loaded, RealBezier)
    assert loaded.points == curve.points
    assert loaded.weights == curve.weights


def test_load_rejects_malformed_documents(tmp_path):
    cases = [
        ("not-json", "{nope"),
        ("not-object", "[1, 2]"),
        ("bad-kind", json.dumps({"kind": "quaternion", "polygon": [], "weights": []})),
        ("missing-arrays", json.dumps({"kind": "complex", "polygon": [[0, 0]]})),
        ("length-mismatch", json.dumps({"kind": "complex", "polygon": [[0, 0], [1, 0]], "weights": [[1, 0]]})),
        ("scalar-weight", json.dumps({"kind": "complex", "polygon": [[0, 0], [1, 0]], "weights": [1, 1]})),
        ("bool-number", json.dumps({"kind": "real", "polygon": [[0, 0], [1, 0]], "weights": [True, 1]})),
        ("nan-literal", '{"kind": "real", "polygon": [[0, NaN], [1, 0]], "weights": [1, 1]}'),
        ("overflowing", json.dumps({"kind": "real", "polygon": [[0, 1e999], [1, 0]], "weights": [1, 1]})),
        ("zero-weight", json.dumps({"kind": "real", "polygon": [[0, 0], [1, 0]], "weights": [1, 0]})),
    ]
    for name, text in cases:
        path = tmp_path / f"{name}.json"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(CurveFileError):
            load_curve(str(path))


def test_load_missing_file():
    with pytest.raises(CurveFileError, match="cannot read"):
        load_curve("/no/such/curve.json")


def test_reduce_command(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    outfile = str(tmp_path / "out.json")
    assert main(["reduce", infile, outfile]) == 0
    assert capsys.readouterr().out == "degree: 2 -> 1\n"
    reduced = load_curve(outfile)
    assert seq_close(reduced.polygon, (1, 1j), 1e-12)
    assert seq_close(reduced.weights, ((1 + 1j) / 2, 1), 1e-12)


def test_reduce_accepts_real_input(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", real_doc(((1, 0), (1, 1), (0, 1)), (0.5, 0.5, 1)))
    outfile = str(tmp_path / "out.json")
    assert main(["reduce", infile, outfile]) == 0
    assert capsys.readouterr().out == "degree: 2 -> 1\n"


def test_check_reducible_curve(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    assert main(["check", infile]) == 1
    out = capsys.readouterr().out
    assert "degree: 2" in out
    assert "irreducible: no" in out
    assert "resultant modulus:" in out


def test_check_irreducible_curve(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", PARABOLA_DOC)
    assert main(["check", infile]) == 0
    assert "irreducible: yes" in capsys.readouterr().out


def test_check_reports_conic_for_cubics(tmp_path, capsys):
    doc = complex_doc((1, 1 + 0.8j, 0.5 + 1j, 1j), (2, 5 / 3, 4 / 3, 1))
    assert main(["check", write_doc(tmp_path / "in.json", doc)]) == 1
    assert "conic: yes" in capsys.readouterr().out


def test_convert_to_real(tmp_path):
    infile = write_doc(tmp_path / "in.json", complex_doc((1, 1j), (1 + 1j, 2)))
    outfile = str(tmp_path / "out.json")
    assert main(["convert", "to-real", infile, outfile]) == 0
    real = load_curve(outfile)
    assert real.points == ((1.0, 0.0), (1.0, 1.0), (0.0, 1.0))
    assert real.weights == (2.0, 2.0, 4.0)


def test_convert_to_complex_with_reduction(tmp_path):
    infile = write_doc(tmp_path / "in.json", real_doc(((1, 0), (1, 1), (0, 1)), (1, 1, 2)))
    outfile = str(tmp_path / "out.json")
    assert main(["convert", "to-complex", infile, outfile, "--reduce"]) == 0
    curve = load_curve(outfile)
    assert isinstance(curve, CxBezier)
    assert curve.degree == 1


def test_convert_kind_mismatch(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    assert main(["convert", "to-complex", infile, str(tmp_path / "out.json")]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_transform_invert_matches_gallery(tmp_path):
    conic, inverted = cissoid(0.5)
    infile = str(tmp_path / "in.json")
    outfile = str(tmp_path / "out.json")
    save_curve(infile, conic)
    assert main(["transform", infile, outfile, "--invert"]) == 0
    got = load_curve(outfile)
    assert seq_close(got.polygon, inverted.polygon, 1e-15)
    assert seq_close(got.weights, inverted.weights, 1e-15)


def test_transform_mobius(tmp_path):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    outfile = str(tmp_path / "out.json")
    assert main(["transform", infile, outfile, "--mobius", "1", "0", "0", "0,2"]) == 0
    got = load_curve(outfile)  # z -> 2i*z
    assert seq_close(got.polygon, (2j, -2 + 2j, -2), 1e-15)


def test_transform_elevate(tmp_path):
    infile = write_doc(tmp_path / "in.json", PARABOLA_DOC)
    outfile = str(tmp_path / "out.json")
    assert main(["transform", infile, outfile, "--elevate", "2", "1"]) == 0
    got = load_curve(outfile)
    assert seq_close(got.polygon, (1, 1 + 0.8j, 0.5 + 1j, 1j), 1e-12)
    assert seq_close(got.weights, (2, 5 / 3, 4 / 3, 1), 1e-12)


def test_transform_reparam_and_scale(tmp_path):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    mid = str(tmp_path / "mid.json")
    out = str(tmp_path / "out.json")
    assert main(["transform", infile, mid, "--reparam", "2.0"]) == 0
    assert seq_close(load_curve(mid).weights, (4, 2, 2), 1e-15)
    assert main(["transform", mid, out, "--scale", "0,1"]) == 0
    assert seq_close(load_curve(out).weights, (4j, 2j, 2j), 1e-15)


def test_transform_bad_parameters(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    outfile = str(tmp_path / "out.json")
    assert main(["transform", infile, outfile, "--scale", "abc"]) == 2
    assert "cannot parse complex number" in capsys.readouterr().err
    assert main(["transform", infile, outfile, "--reparam", "-1"]) == 2
    assert "positive" in capsys.readouterr().err


def test_render_csv(tmp_path):
    infile = write_doc(tmp_path / "in.json", complex_doc((0, 1), (1, 1)))
    csv_path = tmp_path / "out.csv"
    assert main(["render", infile, "--csv", str(csv_path), "--samples", "5"]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "t,x,y"
    assert len(lines) == 6
    t, x, y = (float(v) for v in lines[2].split(","))
    assert (t, x, y) == (0.25, 0.25, 0.0)


def test_render_csv_circle_stays_on_unit_circle(tmp_path):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    csv_path = tmp_path / "out.csv"
    assert main(["render", infile, "--csv", str(csv_path), "--samples", "100"]) == 0
    rows = csv_path.read_text().splitlines()[1:]
    assert len(rows) == 100
    for row in rows:
        _, x, y = (float(v) for v in row.split(","))
        assert abs(x * x + y * y - 1) <= 1e-9


def test_render_csv_skips_pole_rows(tmp_path):
    infile = write_doc(tmp_path / "in.json", complex_doc((0, 1), (1, -1)))
    csv_path = tmp_path / "out.csv"
    assert main(["render", infile, "--csv", str(csv_path), "--samples", "5"]) == 0
    lines = csv_path.read_text().splitlines()
    assert len(lines) == 5  # header + 4 rows, the t=1/2 pole dropped
    assert all(not line.startswith("0.5,") for line in lines[1:])


def test_render_csv_rejects_multiple_inputs(tmp_path, capsys):
    a = write_doc(tmp_path / "a.json", QUARTER_DOC)
    b = write_doc(tmp_path / "b.json", PARABOLA_DOC)
    assert main(["render", a, b, "--csv", str(tmp_path / "out.csv")]) == 2
    assert "single input" in capsys.readouterr().err


def test_render_svg(tmp_path):
    a = write_doc(tmp_path / "a.json", QUARTER_DOC)
    b = write_doc(tmp_path / "b.json", complex_doc((0, 1), (1, -1)))
    svg_path = tmp_path / "out.svg"
    # 65 uniform samples put t = 1/2 on the grid, where the second curve has its pole
    assert main(["render", a, b, "--svg", str(svg_path), "--samples", "65"]) == 0
    text = svg_path.read_text()
    assert text.startswith('<?xml version="1.0"')
    assert "viewBox=" in text
    assert 'stroke="#1f77b4"' in text and 'stroke="#d62728"' in text
    assert "stroke-dasharray" in text and "<circle" in text
    # the pole in the second curve splits its trace into two subpaths
    pole_path = [line for line in text.splitlines() if "#d62728" in line][0]
    assert pole_path.count("M ") == 2
    # SVG y axis points down: the quarter circle's top point appears with cy < 0
    assert 'cy="-1"' in text


def test_render_output_is_deterministic(tmp_path):
    a = write_doc(tmp_path / "a.json", QUARTER_DOC)
    first = tmp_path / "one.svg"
    second = tmp_path / "two.svg"
    assert main(["render", a, "--svg", str(first)]) == 0
    assert main(["render", a, "--svg", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_convert_round_trip_recovers_proportional_real_data(tmp_path):
    infile = write_doc(tmp_path / "in.json", real_doc(((1, 0), (1, 1), (0, 1)), (1, 1, 2)))
    mid = str(tmp_path / "mid.json")
    out = str(tmp_path / "out.json")
    assert main(["convert", "to-complex", infile, mid, "--reduce"]) == 0
    assert main(["convert", "to-real", mid, out]) == 0
    real = load_curve(out)
    assert all(cclose(complex(*g), complex(*w), 1e-12) for g, w in zip(real.points, ((1, 0), (1, 1), (0, 1))))
    ratio = real.weights[0] / 1
    assert all(abs(w - ratio * r) <= 1e-12 for w, r in zip(real.weights, (1, 1, 2)))


def test_render_all_poles(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", complex_doc((0, 1), (1, -1)))
    code = main(["render", infile, "--svg", str(tmp_path / "o.svg"), "--t0", "0.5", "--t1", "0.5"])
    assert code == 2
    assert "every sample hit a pole" in capsys.readouterr().err


def test_render_needs_two_samples(tmp_path, capsys):
    infile = write_doc(tmp_path / "in.json", QUARTER_DOC)
    assert main(["render", infile, "--svg", str(tmp_path / "o.svg"), "--samples", "1"]) == 2
    assert "at least two samples" in capsys.readouterr().err


def test_gallery_command(tmp_path, capsys):
    out_conic = str(tmp_path / "conic.json")
    out_inv = str(tmp_path / "inv.json")
    assert main(["gallery", "cissoid", out_conic, out_inv, "--a", "0.5"]) == 0
    assert "wrote" in capsys.readouterr().out
    conic, inverted = cissoid(0.5)
    assert load_curve(out_conic).polygon == conic.polygon
    assert load_curve(out_inv).polygon == inverted.polygon
    assert load_curve(out_inv).weights == inverted.weights


def test_gallery_rejects_unknown_name(tmp_path, capsys):
    with pytest.raises(SystemExit):
        main(["gallery", "astroid", str(tmp_path / "a.json"), str(tmp_path / "b.json")])
    assert "invalid choice" in capsys.readouterr().err


def test_error_exit_code_for_missing_file(capsys):
    assert main(["check", "/no/such/file.json"]) == 2
    assert capsys.readouterr().err.startswith("error:")
