"""Tests for coning, the hyperboloid model and the H/M/E transfers."""
from fractions import Fraction

import pytest

from rigiditylab.core.exceptions import (
    NonCanonicalPoint,
    NonpositiveScale,
    NotSpiky,
    NotUpperConed,
    OutsideBall,
    ValidationError,
)
from rigiditylab.frameworks.measurements import edge_measurements
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor
from rigiditylab.hyperbolic.coning import ConedGraph, cone_graph, cone_verdict_transfer
from rigiditylab.hyperbolic.hyperboloid import (
    HyperbolicPoint,
    hyperbolic_congruent,
    hyperbolic_distance,
    hyperbolic_equivalent,
    hyperbolic_point_from_ball,
    minkowski_inner,
)
from rigiditylab.hyperbolic.transfer import (
    Sheet,
    cone_to_minkowski,
    cylindrical_coned_configuration,
    hyperbolic_ggr_verdict,
    hyperbolic_witness_pair,
    is_lower_coned,
    is_spiky,
    is_upper_coned,
    is_upper_cylindrical,
    minkowski_to_hyperbolic,
    pogorelov_preserves_cylindrical,
    random_spiky_framework,
    rotate_spiky_to_cylindrical,
    sheet_classification,
)
from rigiditylab.linalg.sampling import cayley_orthogonal, random_rational_vector
from rigiditylab.pogorelov.builder import build_noncongruent_equivalent_pair
from rigiditylab.pogorelov.pairs import FrameworkPair
from rigiditylab.rigidity.verdicts import Verdict

BOUND = 1000


def _hyperbolic(graph, params):
    """Hyperbolic framework with vertex t at the ball point params[t]."""
    d = len(params[0])
    points = [hyperbolic_point_from_ball(u, d).ray for u in params]
    return Framework.build(graph, points, SpaceDescriptor.hyperbolic(d))


def _raw_rays(graph, d, seed):
    """Hyperbolic framework stored as unnormalized rays (x_0 above the spatial 1-norm)."""
    points = []
    for t in range(graph.v):
        spatial = random_rational_vector(d, BOUND, seed * 1000 + t, denominator=7)
        points.append((sum(abs(x) for x in spatial) + Fraction(1, 3),) + spatial)
    return Framework.build(graph, points, SpaceDescriptor.hyperbolic(d))


def _ball_points(graph, seed):
    """H^2 framework at seeded ball points of 1-norm below 1/2."""
    params = []
    for t in range(graph.v):
        x = random_rational_vector(2, BOUND, seed * 1000 + t)
        scale = 2 * (sum(abs(a) for a in x) + 1)
        params.append(tuple(a / scale for a in x))
    return _hyperbolic(graph, params)


@pytest.fixture
def hyperbolic_triangle(triangle):
    """Triangle in H^2 given by three ball points."""
    return _hyperbolic(triangle, [(0, 0), (Fraction(1, 2), 0), (Fraction(1, 5), Fraction(2, 3))])


class TestConing:
    """Tests for coned graphs and the verdict transfer."""

    def test_cone_of_triangle(self, triangle):
        """Test coning K3 gives K4."""
        coned = cone_graph(triangle)
        assert set(coned.graph.edges) == set(Graph.complete(4).edges)
        assert coned.cone_vertex == 3 and coned.e == 6

    def test_cone_of_edgeless_pair(self):
        """Test two isolated vertices gain exactly two edges."""
        coned = cone_graph(Graph(2))
        assert coned.graph.edges == ((0, 2), (1, 2))

    def test_from_graph(self, k4_plus_degree_two):
        """Test the base is recovered from a coned graph."""
        coned = cone_graph(k4_plus_degree_two)
        assert ConedGraph.from_graph(coned.graph).base == k4_plus_degree_two
        with pytest.raises(ValidationError):
            ConedGraph.from_graph(Graph.path(3))

    @pytest.mark.parametrize("graph,d,rigid", [
        (Graph.complete(4), 2, True),
        (Graph.complete(4).with_vertex([0, 1]), 2, False),
        (Graph.path(3), 1, False),
        (Graph.cycle(3), 1, True),
    ])
    def test_verdicts_agree(self, graph, d, rigid):
        """Test the graph and its cone get the same verdict one dimension up."""
        transfer = cone_verdict_transfer(graph, d, seed=0, bound=BOUND)
        assert transfer.agree
        assert transfer.base.is_globally_rigid == rigid
        assert transfer.coned.d == d + 1
        assert transfer.to_dict()["agree"] is True

    def test_battery_agrees(self, battery):
        """Test coning agrees on every battery graph."""
        for name, (graph, _) in battery.items():
            assert cone_verdict_transfer(graph, 2, seed=1, bound=BOUND).agree, name


class TestHyperboloid:
    """Tests for the Minkowski form and hyperbolic points."""

    def test_base_point(self):
        """Test <e0, e0> = -1."""
        assert minkowski_inner((1, 0, 0), (1, 0, 0)) == -1

    def test_spacelike_orthogonal(self):
        """Test e1 and e2 are orthogonal."""
        assert minkowski_inner((0, 1, 0), (0, 0, 1)) == 0

    def test_ball_origin(self):
        """Test the ball origin maps to the base point."""
        assert hyperbolic_point_from_ball((0, 0), 2).ray == (1, 0, 0)

    def test_ball_half(self):
        """Test u = 1/2 maps to (5/3, 4/3) on the locus."""
        point = hyperbolic_point_from_ball((Fraction(1, 2),), 1)
        assert point.ray == (Fraction(5, 3), Fraction(4, 3))
        assert minkowski_inner(point.ray, point.ray) == -1

    @pytest.mark.parametrize("u", [(Fraction(1, 3), Fraction(-2, 7)), (Fraction(9, 10), 0), (0, Fraction(-1, 99))])
    def test_locus(self, u):
        """Test every ball point lands exactly on the locus."""
        ray = hyperbolic_point_from_ball(u, 2).ray
        assert minkowski_inner(ray, ray) == -1 and ray[0] > 0

    def test_outside_ball(self):
        """Test |u| >= 1 is rejected."""
        with pytest.raises(OutsideBall):
            hyperbolic_point_from_ball((1, 0), 2)

    def test_rays(self):
        """Test rays are scaled onto the locus when the norm is a square."""
        assert HyperbolicPoint.from_ray((2, 0)).canonical() == (1, 0)
        with pytest.raises(NonCanonicalPoint):
            HyperbolicPoint.from_ray((2, 1)).canonical()
        with pytest.raises(ValidationError):
            HyperbolicPoint.from_ray((0, 1))
        with pytest.raises(ValidationError):
            HyperbolicPoint.from_ray((-1, 0))

    def test_representative(self):
        """Test the exact point on a ray is the locus point when rational and the ray otherwise."""
        assert HyperbolicPoint.from_ray((2, 0)).representative() == (1, 0)
        assert HyperbolicPoint.from_ray((2, 1)).representative() == (2, 1)

    def test_distance(self):
        """Test the distance from the origin to u = 1/2 is 2 artanh(1/2)."""
        a = hyperbolic_point_from_ball((0,), 1).ray
        b = hyperbolic_point_from_ball((Fraction(1, 2),), 1).ray
        assert hyperbolic_distance(a, b) == pytest.approx(1.0986122886681098)


class TestHyperbolicEquivalence:
    """Tests for hyperbolic_equivalent and hyperbolic_congruent."""

    def test_self(self, hyperbolic_triangle):
        """Test f is equivalent to itself."""
        assert hyperbolic_equivalent(hyperbolic_triangle, hyperbolic_triangle)

    def test_scaled_rays(self, hyperbolic_triangle):
        """Test scaling a ray does not move the point."""
        points = list(hyperbolic_triangle.config.points)
        points[1] = tuple(7 * x for x in points[1])
        scaled = hyperbolic_triangle.with_config(Configuration(tuple(points)))
        assert hyperbolic_equivalent(hyperbolic_triangle, scaled)

    def test_moved_point(self, hyperbolic_triangle):
        """Test replacing one ball parameter breaks equivalence."""
        moved = _hyperbolic(hyperbolic_triangle.graph, [(0, 0), (Fraction(1, 3), 0), (Fraction(1, 5), Fraction(2, 3))])
        assert not hyperbolic_equivalent(hyperbolic_triangle, moved)

    @pytest.mark.parametrize("seed", range(4))
    def test_lorentz_transform(self, hyperbolic_triangle, seed):
        """Test a sheet-preserving Minkowski isometry gives an equivalent, congruent framework."""
        o = cayley_orthogonal(seed, 3, 1)
        if o.apply((1, 0, 0))[0] < 0:
            o = o.scale(-1)
        moved = hyperbolic_triangle.config.map_points(o.apply)
        g = hyperbolic_triangle.with_config(moved)
        assert hyperbolic_equivalent(hyperbolic_triangle, g)
        assert hyperbolic_congruent(hyperbolic_triangle.config, g.config)

    @pytest.mark.slow
    def test_lorentz_transform_sweep(self, k4):
        """Test 50 random H^2 frameworks stay equivalent and congruent under sheet-preserving isometries."""
        for seed in range(50):
            f = _ball_points(k4, seed)
            o = cayley_orthogonal(seed, 3, 1, flip=seed % 2 == 1)
            if o.apply((1, 0, 0))[0] < 0:
                o = o.scale(-1)
            g = f.with_config(f.config.map_points(o.apply))
            assert hyperbolic_equivalent(f, g), seed
            assert hyperbolic_congruent(f.config, g.config), seed



class TestMinkowskiTransfer:
    """Tests for cone_to_minkowski and minkowski_to_hyperbolic."""

    def test_unit_scales(self, hyperbolic_triangle):
        """Test unit scales put base vertices on the locus and the cone at the origin."""
        f = cone_to_minkowski(hyperbolic_triangle)
        assert f.space == SpaceDescriptor.minkowski(3)
        assert f[3] == (0, 0, 0)
        for t in range(3):
            assert minkowski_inner(f[t], f[t]) == -1
        assert is_upper_coned(f)

    @pytest.mark.parametrize("seed", range(3))
    def test_round_trip(self, hyperbolic_triangle, seed):
        """Test coning with random scales and offset and coming back is congruent."""
        f = cone_to_minkowski(hyperbolic_triangle, seed=seed, bound=BOUND)
        back = minkowski_to_hyperbolic(f)
        assert back.space == hyperbolic_triangle.space
        assert back.graph == hyperbolic_triangle.graph
        assert hyperbolic_congruent(back.config, hyperbolic_triangle.config)

    @pytest.mark.slow
    def test_round_trip_sweep(self, k4):
        """Test 50 random H^2 frameworks come back congruent through coned Minkowski space."""
        for seed in range(50):
            f = _ball_points(k4, seed)
            coned = cone_to_minkowski(f, seed=seed, bound=BOUND)
            assert is_upper_coned(coned), seed
            back = minkowski_to_hyperbolic(coned)
            assert hyperbolic_equivalent(back, f), seed
            assert hyperbolic_congruent(back.config, f.config), seed


    def test_raw_rays_with_irrational_norm(self):
        """Test rays off the locus are coned without normalizing and come back congruent."""
        f = Framework.build(Graph.path(2), [(2, 1, 0), (3, 1, 1)], SpaceDescriptor.hyperbolic(2))
        unit = cone_to_minkowski(f)
        assert unit[0] == (2, 1, 0) and unit[1] == (3, 1, 1)
        coned = cone_to_minkowski(f, seed=0, bound=BOUND)
        assert is_upper_coned(coned)
        back = minkowski_to_hyperbolic(coned)
        assert hyperbolic_equivalent(back, f)
        assert hyperbolic_congruent(back.config, f.config)

    @pytest.mark.parametrize("seed", range(50))
    def test_raw_ray_round_trip(self, k4, seed):
        """Test random scales and offsets preserve every hyperbolic distance of a raw-ray K4."""
        f = _raw_rays(k4, 2, seed)
        back = minkowski_to_hyperbolic(cone_to_minkowski(f, seed=seed, bound=BOUND))
        assert back.graph == k4
        assert hyperbolic_equivalent(back, f)
        assert hyperbolic_congruent(back.config, f.config)

    def test_nonpositive_scale(self, hyperbolic_triangle):
        """Test a zero scale is refused."""
        with pytest.raises(NonpositiveScale):
            cone_to_minkowski(hyperbolic_triangle, scales=[1, 0, 1])

    def test_lower_coned(self, hyperbolic_triangle):
        """Test a framework on the lower sheet is refused."""
        f = cone_to_minkowski(hyperbolic_triangle)
        lower = f.with_config(f.config.map_points(lambda p: [-x for x in p]))
        assert is_lower_coned(lower)
        with pytest.raises(NotUpperConed):
            minkowski_to_hyperbolic(lower)

    def test_sheets(self, hyperbolic_triangle):
        """Test equal frameworks share the upper sheet and negation moves to the lower one."""
        f = cone_to_minkowski(hyperbolic_triangle)
        negated = f.with_config(f.config.map_points(lambda p: [-x for x in p]))
        assert sheet_classification(FrameworkPair(f, f)) is Sheet.UPPER
        assert sheet_classification(FrameworkPair(f, negated)) is Sheet.LOWER


class TestEuclideanPipeline:
    """Tests for the spiky, cylindrical and Pogorelov steps through E^(d+1)."""

    @pytest.mark.parametrize("d", [1, 2])
    def test_cylindrical_is_upper_coned(self, k4, d):
        """Test upper cylindrical frameworks are upper coned in Minkowski space."""
        for seed in range(3):
            config = cylindrical_coned_configuration(k4, d, seed, bound=BOUND)
            f = Framework(cone_graph(k4).graph, config, SpaceDescriptor.euclidean(d + 1))
            assert is_upper_cylindrical(f)
            assert is_upper_coned(f.with_space(SpaceDescriptor.minkowski(d + 1)))

    def test_spiky_rotation(self, triangle):
        """Test a spiky framework rotates to an upper cylindrical one with nearly equal lengths."""
        f = random_spiky_framework(triangle, 2, seed=4, bound=BOUND)
        assert is_spiky(f)
        rotated = rotate_spiky_to_cylindrical(f)
        assert is_upper_cylindrical(rotated)
        for a, b in zip(edge_measurements(f), edge_measurements(rotated)):
            assert float(a) == pytest.approx(float(b), abs=1e-9)

    def test_not_spiky(self, triangle):
        """Test a framework close to its cone vertex is not spiky."""
        f = Framework.build(
            cone_graph(triangle).graph,
            [(0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 0, 0)],
            SpaceDescriptor.euclidean(3),
        )
        assert not is_spiky(f)
        with pytest.raises(NotSpiky):
            rotate_spiky_to_cylindrical(f)

    def test_pogorelov_keeps_cylinder(self, k4_plus_degree_two):
        """Test the s = 1 image of an upper-cylindrical pair stays cylindrical and upper."""
        coned = cone_graph(k4_plus_degree_two)
        config = cylindrical_coned_configuration(k4_plus_degree_two, 2, seed=2, bound=BOUND)
        pair = build_noncongruent_equivalent_pair(coned.graph, 3, config=config, candidates=range(5))
        image, cylindrical = pogorelov_preserves_cylindrical(pair)
        assert cylindrical
        assert image.is_equivalent() and not image.is_congruent()
        assert sheet_classification(image) is Sheet.UPPER

    @pytest.mark.parametrize("d", [1, 2])
    def test_witness_pair(self, d):
        """Test the full pipeline gives an equivalent, non-congruent hyperbolic pair."""
        graph = Graph.complete(d + 2).with_vertex(range(d))
        pair = hyperbolic_witness_pair(graph, d, seed=1, bound=BOUND)
        assert pair.space == SpaceDescriptor.hyperbolic(d)
        assert hyperbolic_equivalent(pair.first, pair.second)
        assert not hyperbolic_congruent(pair.first.config, pair.second.config)


class TestHyperbolicVerdict:
    """Tests for hyperbolic_ggr_verdict."""

    def test_k4(self, k4):
        """Test K4 is GGR in H^2."""
        verdict = hyperbolic_ggr_verdict(k4, 2, seed=0, bound=BOUND)
        assert verdict.verdict is Verdict.GGR
        assert verdict.space == "hyperbolic" and verdict.transfer_derived

    def test_witness(self, k4_plus_degree_two):
        """Test a GGF verdict carries a verified hyperbolic witness pair."""
        verdict = hyperbolic_ggr_verdict(k4_plus_degree_two, 2, seed=0, witness=True, bound=BOUND)
        assert verdict.verdict is Verdict.GGF
        pair = verdict.witness_pair
        assert pair.space == SpaceDescriptor.hyperbolic(2)
        assert hyperbolic_equivalent(pair.first, pair.second)
        assert not hyperbolic_congruent(pair.first.config, pair.second.config)

    def test_flexible(self, path4):
        """Test a path is flexible in H^2."""
        assert hyperbolic_ggr_verdict(path4, 2, seed=0, bound=BOUND).verdict is Verdict.FLEXIBLE

    def test_no_witness_for_flexible(self, path4):
        """Test a FLEXIBLE verdict skips the witness construction even when asked."""
        verdict = hyperbolic_ggr_verdict(path4, 2, seed=0, witness=True, bound=BOUND)
        assert verdict.verdict is Verdict.FLEXIBLE
        assert verdict.witness_pair is None
        assert not any("witness" in note for note in verdict.notes)

