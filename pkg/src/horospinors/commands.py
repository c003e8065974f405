"""
Command handlers - one function per CLI subcommand
"""

from __future__ import annotations

from itertools import combinations

from horospinors.config import config
from horospinors.documents import InputDocument, ReportDocument, encode_complex, encode_spinor
from horospinors.errors import (
    CommonCentre,
    DegeneratePair,
    NotTotallyPositive,
    ParseError,
    WrongArity,
)
from horospinors.horospheres import (
    DecoratedHorosphereUHS,
    Finite,
    decorated_horosphere_uhs,
)
from horospinors.lambda_lengths import (
    complex_distance,
    lambda_length,
    ptolemy_terms,
    shape_parameters,
)
from horospinors.polygons_grassmannians import (
    Field,
    SpinorTuple,
    cyclic_order_ok,
    ford_spinors,
    gauge_normalize,
    is_planar_real,
    is_totally_positive,
    plucker,
)
from horospinors.render import SvgRenderer, Window
from horospinors.spinor_flags import require_nonzero
from horospinors.utils import logger


def _require_all_nonzero(doc: InputDocument) -> None:
    for index, k in enumerate(doc.spinors):
        require_nonzero(k, index)


def _lambda_matrix(doc: InputDocument) -> list[list[complex]]:
    """Antisymmetric matrix of lambda lengths, upper triangle mirrored"""
    d = len(doc.spinors)
    matrix = [[0j] * d for _ in range(d)]
    for i, j in combinations(range(d), 2):
        value = lambda_length(doc.spinors[i], doc.spinors[j])
        matrix[i][j] = value
        matrix[j][i] = -value
    return matrix


def _describe_horosphere(h: DecoratedHorosphereUHS, planar: bool) -> dict:
    centre = encode_complex(h.centre.z) if isinstance(h.centre, Finite) else "infinity"
    return {
        "centre": centre,
        "size": h.size,
        "direction": encode_complex(h.direction),
        "planar": planar,
    }


def cmd_lambda(doc: InputDocument) -> ReportDocument:
    """
    Lambda lengths and complex distances between all pairs of spinors.

    Args:
        doc: Input spinors

    Returns:
        Report with the lambda matrix, a complex distance per pair with nonzero
        lambda length, the pairs sharing a centre and the horospheres in upper half space

    Raises:
        ZeroSpinor: If some spinor is zero (the index is reported)
    """
    _require_all_nonzero(doc)
    logger.info(f"Computing lambda lengths for {len(doc.spinors)} spinors")

    distances = []
    common_centres = []
    for i, j in combinations(range(len(doc.spinors)), 2):
        try:
            d = complex_distance(doc.spinors[i], doc.spinors[j])
        except CommonCentre:
            common_centres.append([i, j])
            continue
        distances.append({"i": i, "j": j, "rho": d.rho, "theta": d.theta})

    horospheres = [
        _describe_horosphere(decorated_horosphere_uhs(k), is_planar_real(k)) for k in doc.spinors
    ]
    return ReportDocument(
        "lambda",
        lambda_matrix=_lambda_matrix(doc),
        labels=doc.labels,
        sections={
            "complex_distances": distances,
            "common_centres": common_centres,
            "horospheres": horospheres,
        },
    )


def cmd_tetra(doc: InputDocument) -> ReportDocument:
    """
    Ptolemy relation and shape parameters of the ideal tetrahedron of four spinors.

    Raises:
        WrongArity: If there are not exactly four spinors
        ZeroSpinor: If some spinor is zero
        DegenerateTetrahedron: If some pairwise lambda length vanishes
    """
    if len(doc.spinors) != 4:
        raise WrongArity(f"tetra needs exactly 4 spinors, got {len(doc.spinors)}")
    _require_all_nonzero(doc)

    k0, k1, k2, k3 = doc.spinors
    shape = shape_parameters(k0, k1, k2, k3)
    first, second, diagonal = ptolemy_terms(k0, k1, k2, k3)
    residual = first + second - diagonal
    scale = max(abs(first), abs(second), abs(diagonal))

    tol = config.tol
    sum_check = abs(shape.z + 1 / shape.zp - 1) <= tol * max(1.0, abs(shape.z))
    product = shape.z * shape.zp * shape.zpp
    product_check = abs(product + 1) <= tol * max(1.0, abs(shape.z), abs(shape.zp), abs(shape.zpp))

    return ReportDocument(
        "tetra",
        lambda_matrix=_lambda_matrix(doc),
        labels=doc.labels,
        sections={
            "ptolemy": {
                "terms": [encode_complex(first), encode_complex(second), encode_complex(diagonal)],
                "residual": encode_complex(residual),
                "relative_residual": abs(residual) / scale,
            },
            "shape": {
                "z": encode_complex(shape.z),
                "zp": encode_complex(shape.zp),
                "zpp": encode_complex(shape.zpp),
            },
            "checks": {
                "z_plus_inverse_zp_is_one": bool(sum_check),
                "product_is_minus_one": bool(product_check),
                "consistent": shape.is_consistent(),
            },
        },
    )


def cmd_grassmann(doc: InputDocument, field: Field = Field.COMPLEX) -> ReportDocument:
    """
    Plucker coordinates, positivity and a gauge-normalised representative.

    In real mode a tuple that is not totally positive is reported with verdict false
    and normalised over the complex numbers instead.

    Raises:
        ParseError: If fewer than three spinors are given
        ZeroSpinor: If some spinor is zero
        RankDeficient: If every Plucker coordinate vanishes
    """
    if len(doc.spinors) < 3:
        raise ParseError(f"grassmann needs at least 3 spinors, got {len(doc.spinors)}")
    _require_all_nonzero(doc)
    logger.info(f"Computing Plucker coordinates of {len(doc.spinors)} spinors over {field.value}")

    t = SpinorTuple(tuple(doc.spinors))
    coordinates = plucker(t)
    residuals = coordinates.relation_residuals()
    sections: dict = {
        "field": field.value,
        "plucker": {f"{i},{j}": encode_complex(coordinates[i, j]) for i, j in coordinates.pairs()},
        "max_relation_residual": max((abs(r) for r in residuals.values()), default=0.0),
        "zero_pairs": [[i, j] for i, j in coordinates.zero_pairs()],
    }

    normalize_over = field
    if field is Field.REAL:
        positive = is_totally_positive(t)
        sections["totally_positive"] = positive
        if positive:
            centres = [decorated_horosphere_uhs(k).centre for k in t]
            sections["cyclically_ordered"] = cyclic_order_ok(centres)
            sections["horocycle_distances"] = {
                f"{i},{j}": value for (i, j), value in coordinates.horocycle_distances().items()
            }
        else:
            logger.warning("tuple is not totally positive; normalising over the complex numbers")
            normalize_over = Field.COMPLEX

    try:
        normalized = gauge_normalize(t, normalize_over)
        sections["gauge_normalized"] = [encode_spinor(k) for k in normalized]
    except (DegeneratePair, NotTotallyPositive) as e:
        logger.warning(f"no gauge-normalised representative: {e}")
        sections["gauge_normalized"] = None

    return ReportDocument(
        "grassmann",
        lambda_matrix=coordinates.to_matrix().tolist(),
        labels=doc.labels,
        sections=sections,
    )


def cmd_svg(
    doc: InputDocument,
    width: int | None = None,
    height: int | None = None,
    window: Window | None = None,
) -> str:
    """
    SVG picture of the decorated horocycles of the input spinors.

    Raises:
        ZeroSpinor: If some spinor is zero
        EmptyWindow: If the window has no area
    """
    _require_all_nonzero(doc)
    horospheres = [decorated_horosphere_uhs(k) for k in doc.spinors]
    renderer = SvgRenderer(width, height, window)
    logger.info(f"Rendering {len(horospheres)} horocycles: {renderer.get_info()}")
    return renderer.render(horospheres, doc.labels)


def ford_report(q_max: int) -> ReportDocument:
    """
    Ford circles with denominators up to q_max and the tangency of Farey neighbours.

    Raises:
        ParseError: If q_max is not a positive integer
    """
    if q_max < 1:
        raise ParseError(f"--qmax must be a positive integer, got {q_max}")
    spinors = ford_spinors(q_max)

    circles = []
    for k in spinors:
        h = decorated_horosphere_uhs(k)
        circles.append(
            {
                "p": int(k.xi.real),
                "q": int(k.eta.real),
                "centre": h.centre.z.real,
                "diameter": h.size,
            }
        )

    neighbours = []
    for a, b in zip(spinors, spinors[1:]):
        neighbours.append(
            {
                "left": [int(a.xi.real), int(a.eta.real)],
                "right": [int(b.xi.real), int(b.eta.real)],
                "lambda": encode_complex(lambda_length(a, b)),
            }
        )
    return ReportDocument(
        "ford", sections={"q_max": q_max, "circles": circles, "neighbours": neighbours}
    )


def cmd_ford(
    q_max: int,
    width: int | None = None,
    height: int | None = None,
    window: Window | None = None,
) -> str:
    """
    SVG picture of the Ford circles at p/q in [0, 1] with q <= q_max.

    Raises:
        ParseError: If q_max is not a positive integer
        EmptyWindow: If the window has no area
    """
    if q_max < 1:
        raise ParseError(f"--qmax must be a positive integer, got {q_max}")
    spinors = ford_spinors(q_max)
    return cmd_svg(InputDocument(spinors), width, height, window)
