"""Tests for the command handlers"""

import math
import xml.etree.ElementTree as ET

import pytest

from horospinors.commands import (
    cmd_ford,
    cmd_grassmann,
    cmd_lambda,
    cmd_svg,
    cmd_tetra,
    ford_report,
)
from horospinors.documents import InputDocument, ReportDocument
from horospinors.errors import ParseError, WrongArity, ZeroSpinor
from horospinors.polygons_grassmannians import Field
from horospinors.spinor_flags import Spinor

Z = 2 + 1j


def doc_of(*pairs, labels=None) -> InputDocument:
    return InputDocument([Spinor(xi, eta) for xi, eta in pairs], labels)


def by_class(svg: str, name: str) -> list[ET.Element]:
    root = ET.fromstring(svg)
    return [element for element in root.iter() if element.get("class") == name]


class TestLambda:
    def test_report(self):
        report = cmd_lambda(doc_of((1, 0), (0, 1), (2, 0)))
        assert report.command == "lambda"
        assert report.lambda_matrix == [[0, 1, 0], [-1, 0, -2], [0, 2, 0]]
        assert report.sections["common_centres"] == [[0, 2]]

        distances = report.sections["complex_distances"]
        assert [(d["i"], d["j"]) for d in distances] == [(0, 1), (1, 2)]
        assert distances[0]["rho"] == 0 and distances[0]["theta"] == 0
        assert distances[1]["rho"] == pytest.approx(2 * math.log(2))
        assert distances[1]["theta"] == pytest.approx(2 * math.pi)

    def test_horospheres(self):
        report = cmd_lambda(doc_of((1, 0), (3, -2), (1j, 0)))
        first, second, third = report.sections["horospheres"]
        assert first == {"centre": "infinity", "size": 1.0, "direction": [0.0, 1.0], "planar": True}
        assert second["centre"] == [-1.5, 0.0]
        assert second["size"] == pytest.approx(0.25)
        assert second["planar"] is True
        assert third["planar"] is False
        assert third["direction"] == pytest.approx([0.0, -1.0])

    def test_matrix_is_antisymmetric(self):
        report = cmd_lambda(doc_of((1, 2j), (0.5, -1), (3, 1), (1j, 1j)))
        matrix = report.lambda_matrix
        for i in range(4):
            assert matrix[i][i] == 0
            for j in range(4):
                assert matrix[i][j] == -matrix[j][i]

    def test_labels_are_carried(self):
        report = cmd_lambda(doc_of((1, 0), (0, 1), labels=["inf", "zero"]))
        assert report.labels == ["inf", "zero"]
        assert "inf,zero" in report.to_csv()

    def test_zero_spinor_index(self):
        with pytest.raises(ZeroSpinor) as info:
            cmd_lambda(doc_of((1, 0), (0, 1), (0, 0)))
        assert info.value.index == 2

    def test_single_spinor(self):
        report = cmd_lambda(doc_of((1, 1)))
        assert report.lambda_matrix == [[0]]
        assert report.sections["complex_distances"] == []


class TestTetra:
    def test_report(self):
        report = cmd_tetra(doc_of((0, 1), (1, 0), (Z, 1), (1, 1)))
        ptolemy = report.sections["ptolemy"]
        assert ptolemy["residual"] == [0.0, 0.0]
        assert ptolemy["relative_residual"] == 0.0
        shape = report.sections["shape"]
        assert shape["z"] == pytest.approx([2.0, 1.0])
        zp = 1 / (1 - Z)
        assert shape["zp"] == pytest.approx([zp.real, zp.imag])
        assert report.sections["checks"] == {
            "z_plus_inverse_zp_is_one": True,
            "product_is_minus_one": True,
            "consistent": True,
        }

    def test_wrong_arity(self):
        with pytest.raises(WrongArity):
            cmd_tetra(doc_of((0, 1), (1, 0), (1, 1)))


class TestGrassmann:
    def test_real_triangle(self):
        report = cmd_grassmann(doc_of((0, 1), (-1, 1), (-1, 0)), Field.REAL)
        sections = report.sections
        assert sections["field"] == "real"
        assert sections["plucker"] == {"0,1": [1.0, 0.0], "0,2": [1.0, 0.0], "1,2": [1.0, 0.0]}
        assert sections["totally_positive"] is True
        assert sections["cyclically_ordered"] is True
        assert sections["horocycle_distances"] == {"0,1": 0.0, "0,2": 0.0, "1,2": 0.0}
        assert sections["max_relation_residual"] == 0.0
        assert sections["gauge_normalized"][0] == [1.0, 0.0, 0.0, 0.0]
        assert report.lambda_matrix[1][0] == -1

    def test_real_mode_falls_back_to_complex_normalisation(self):
        report = cmd_grassmann(doc_of((0, 1), (1, 0), (Z, 1), (1, 1)), Field.REAL)
        assert report.sections["totally_positive"] is False
        assert "horocycle_distances" not in report.sections
        assert len(report.sections["gauge_normalized"]) == 4
        assert report.sections["max_relation_residual"] == 0.0

    def test_complex_mode(self):
        report = cmd_grassmann(doc_of((1, 0), (0, 1), (2, 0)))
        assert report.sections["field"] == "complex"
        assert report.sections["zero_pairs"] == [[0, 2]]
        assert "totally_positive" not in report.sections

    def test_degenerate_first_pair(self):
        report = cmd_grassmann(doc_of((1, 0), (2, 0), (0, 1)))
        assert report.sections["gauge_normalized"] is None

    def test_needs_three_spinors(self):
        with pytest.raises(ParseError):
            cmd_grassmann(doc_of((1, 0), (0, 1)))

    def test_report_is_json(self):
        report = cmd_grassmann(doc_of((1, 2j), (0.5, -1), (3, 1), (1j, 1j)))
        parsed = ReportDocument.from_json(report.to_json())
        assert parsed.sections["plucker"] == report.sections["plucker"]


class TestSvg:
    def test_unit_circle_and_arrow(self):
        svg = cmd_svg(doc_of((0, 1)))
        (circle,) = by_class(svg, "horocycle")
        assert float(circle.get("cx")) == pytest.approx(400)
        assert float(circle.get("cy")) == pytest.approx(300)
        assert float(circle.get("r")) == pytest.approx(250)

        (arrow,) = by_class(svg, "decoration")
        x1, y1 = float(arrow.get("x1")), float(arrow.get("y1"))
        x2, y2 = float(arrow.get("x2")), float(arrow.get("y2"))
        assert (x1, y1) == pytest.approx((400, 50))
        assert x2 == pytest.approx(x1)
        assert y2 < y1

    def test_arrow_points_right(self):
        k = Spinor(complex(math.cos(-math.pi / 4), math.sin(-math.pi / 4)), 0)
        svg = cmd_svg(InputDocument([Spinor(0, 1), k]))
        arrows = by_class(svg, "decoration")
        x1, y1 = float(arrows[1].get("x1")), float(arrows[1].get("y1"))
        x2, y2 = float(arrows[1].get("x2")), float(arrows[1].get("y2"))
        assert x2 > x1
        assert y2 == pytest.approx(y1)

    def test_plane_and_labels(self):
        svg = cmd_svg(doc_of((1, 0), (0, 1), labels=["a", "b"]))
        assert len(by_class(svg, "horocycle-line")) == 1
        assert len(by_class(svg, "horocycle")) == 1
        assert [t.text for t in by_class(svg, "label")] == ["a", "b"]

    def test_size_override(self):
        root = ET.fromstring(cmd_svg(doc_of((0, 1)), width=300, height=200))
        assert float(root.get("width")) == 300
        assert float(root.get("height")) == 200

    def test_zero_spinor(self):
        with pytest.raises(ZeroSpinor):
            cmd_svg(doc_of((0, 0)))


class TestFord:
    def test_report(self):
        report = ford_report(3)
        circles = report.sections["circles"]
        assert [(c["p"], c["q"]) for c in circles] == [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]
        assert circles[1]["centre"] == pytest.approx(1 / 3)
        assert circles[1]["diameter"] == pytest.approx(1 / 9)
        assert all(n["lambda"] == [-1.0, 0.0] for n in report.sections["neighbours"])

    def test_neighbours_are_tangent(self):
        circles = ford_report(7).sections["circles"]
        for a, b in zip(circles, circles[1:]):
            gap = abs(a["centre"] - b["centre"])
            assert gap == pytest.approx(math.sqrt(a["diameter"] * b["diameter"]), rel=1e-12)

    def test_svg(self):
        svg = cmd_ford(5)
        assert len(by_class(svg, "horocycle")) == len(ford_report(5).sections["circles"]) == 11
        assert len(by_class(svg, "decoration")) == 11

    @pytest.mark.parametrize("q_max", [0, -3])
    def test_invalid(self, q_max):
        with pytest.raises(ParseError):
            ford_report(q_max)
        with pytest.raises(ParseError):
            cmd_ford(q_max)
