import itertools
import json
from math import comb

import pytest

from tlblob.diagrams import (
    BlobPairing,
    Pairing,
    blob_e,
    compose_blob,
    compose_tl,
    cut,
    diagram_from_json,
    diagram_to_json,
    enumerate_blob,
    enumerate_tl,
    exposed_lines,
    generator_u,
    identity,
    propagating_number,
    reflect,
)
from tlblob.rings import BlobParams, LaurentInt


def brute_force_planar_count(n, m):
    """Independent matcher: every perfect matching, filtered by a crossing
    scan in the circular boundary order."""
    total = n + m
    if total % 2:
        return 0

    def all_matchings(points):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for i, second in enumerate(rest):
            for sub in all_matchings(rest[:i] + rest[i + 1:]):
                yield [(first, second)] + sub

    count = 0
    for match in all_matchings(list(range(total))):
        crossing = any(
            a < c < b < d or c < a < d < b
            for (a, b), (c, d) in itertools.combinations(match, 2)
        )
        if not crossing:
            count += 1
    return count


class TestConstruction:
    def test_crossing_rejected(self):
        # (t1,b2) and (t2,b1) cross inside the frame
        with pytest.raises(ValueError):
            Pairing(2, 2, ((0, 3), (1, 2)))

    def test_incomplete_rejected(self):
        with pytest.raises(ValueError):
            Pairing(2, 2, ((0, 1),))

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            Pairing(2, 1, ((0, 1), (2, 2)))

    def test_equality_is_partition_equality(self):
        d1 = Pairing(2, 2, ((0, 1), (2, 3)))
        d2 = Pairing(2, 2, ((3, 2), (1, 0)))
        assert d1 == d2 and hash(d1) == hash(d2)


class TestGenerators:
    def test_u1_at_n2(self):
        assert generator_u(1, 2).pairs == ((0, 1), (2, 3))

    def test_identity_reflects_to_itself(self):
        for n in range(1, 6):
            assert reflect(identity(n)) == identity(n)

    def test_reflect_swaps_generators(self):
        assert reflect(generator_u(1, 3)) == generator_u(2, 3)

    def test_reflect_involution(self):
        for d in enumerate_tl(4, 4):
            assert reflect(reflect(d)) == d

    def test_shifted_indexing(self):
        # Shifted index 0 on 2k strands is the middle generator.
        assert generator_u(0, 4, "shifted") == generator_u(2, 4)
        assert generator_u(-1, 4, "shifted") == generator_u(1, 4)
        assert generator_u(1, 4, "shifted") == generator_u(3, 4)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            generator_u(0, 3)
        with pytest.raises(ValueError):
            generator_u(3, 3)
        with pytest.raises(ValueError):
            generator_u(2, 4, "shifted")


class TestComposition:
    def test_cupcap_squared_drops_a_loop(self):
        u = generator_u(1, 2)
        res = compose_tl(u, u)
        assert res.diagram == u
        assert res.plain_loops == 1

    def test_identity_neutral(self):
        for d in enumerate_tl(3, 3):
            left = compose_tl(identity(3), d)
            right = compose_tl(d, identity(3))
            assert left.diagram == right.diagram == d
            assert left.plain_loops == right.plain_loops == 0

    def test_u1_after_u2_traced_by_hand(self):
        res = compose_tl(generator_u(1, 3), generator_u(2, 3))
        assert res.diagram == Pairing(3, 3, ((0, 1), (2, 3), (4, 5)))
        assert res.plain_loops == 0

    def test_rectangular_shapes(self):
        up, down = cut(generator_u(1, 3))
        res = compose_tl(up, down)
        assert res.diagram == generator_u(1, 3)

    def test_mismatch_raises(self):
        with pytest.raises(ValueError):
            compose_tl(identity(2), identity(3))

    def test_associative_with_additive_loops(self):
        diagrams = enumerate_tl(3, 3)
        for d1, d2, d3 in itertools.product(diagrams, repeat=3):
            r12 = compose_tl(d1, d2)
            left = compose_tl(r12.diagram, d3)
            r23 = compose_tl(d2, d3)
            right = compose_tl(d1, r23.diagram)
            assert left.diagram == right.diagram
            assert r12.plain_loops + left.plain_loops == \
                r23.plain_loops + right.plain_loops

    def test_propagating_number_submultiplicative(self):
        diagrams = enumerate_tl(4, 4)
        for d1, d2 in itertools.product(diagrams, repeat=2):
            ha = propagating_number(compose_tl(d1, d2).diagram)
            assert ha <= min(propagating_number(d1), propagating_number(d2))


class TestPropagatingAndCut:
    def test_identity_fully_propagating(self):
        for n in range(1, 6):
            assert propagating_number(identity(n)) == n

    def test_cupcap_counts(self):
        assert propagating_number(generator_u(1, 2)) == 0
        assert propagating_number(generator_u(1, 3)) == 1

    def test_cut_identity(self):
        up, down = cut(identity(3))
        assert up == identity(3) and down == identity(3)

    def test_cut_u1_n3_is_forced(self):
        up, down = cut(generator_u(1, 3))
        assert (up.n, up.m) == (3, 1) and (down.n, down.m) == (1, 3)
        res = compose_tl(up, down)
        assert res.diagram == generator_u(1, 3) and res.plain_loops == 0
        # the loop-free decomposition is the unique one among all candidates
        candidates = [
            (u, d)
            for u in enumerate_tl(3, 1)
            for d in enumerate_tl(1, 3)
            if compose_tl(u, d) == compose_tl(up, down)
        ]
        assert candidates == [(up, down)]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_cut_recomposes_loop_free(self, n):
        for d in enumerate_tl(n, n):
            up, down = cut(d)
            assert up.m == down.n == propagating_number(d)
            res = compose_tl(up, down)
            assert res.diagram == d and res.plain_loops == 0


class TestEnumeration:
    def test_small_counts(self):
        assert len(enumerate_tl(2, 2)) == 2
        assert len(enumerate_tl(3, 3)) == 5

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5),
                                     (2, 4), (1, 3), (0, 4), (4, 2), (6, 6)])
    def test_against_brute_force_matcher(self, n, m):
        listed = enumerate_tl(n, m)
        assert len(set(listed)) == len(listed)
        assert len(listed) == brute_force_planar_count(n, m)

    def test_parity_gives_empty(self):
        assert enumerate_tl(2, 3) == []

    @pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 20), (4, 70)])
    def test_blob_counts_match_central_binomial(self, n, count):
        diagrams = enumerate_blob(n)
        assert len(diagrams) == len(set(diagrams)) == count == comb(2 * n, n)


class TestExposedness:
    def test_identity_has_one_exposed_line(self):
        assert exposed_lines(identity(3)) == [(0, 3)]

    def test_cupcap_all_exposed_at_west(self):
        assert len(exposed_lines(generator_u(1, 3))) == 3
        assert exposed_lines(generator_u(2, 3)) == [(0, 3)]

    def test_blob_on_covered_line_rejected(self):
        with pytest.raises(ValueError):
            BlobPairing(identity(2), frozenset([(1, 3)]))

    def test_blob_on_missing_line_rejected(self):
        with pytest.raises(ValueError):
            BlobPairing(identity(2), frozenset([(0, 1)]))


class TestBlobComposition:
    def test_blob_merge(self):
        params = BlobParams.integral_form(2)
        res, scalar = compose_blob(blob_e(1), blob_e(1), params)
        assert res.diagram == blob_e(1)
        assert res.blob_merges == 1 and res.blob_loops == 0 and res.plain_loops == 0
        assert scalar == params.delta_e

    def test_blob_identity_neutral(self):
        params = BlobParams.integral_form(2)
        res, scalar = compose_blob(blob_e(2), BlobPairing(identity(2)), params)
        assert res.diagram == blob_e(2)
        assert scalar == LaurentInt.one()

    def test_blobbed_loop_evaluates_to_gamma(self):
        # The blob rides onto the closed loop formed by the two cup-caps.
        params = BlobParams.integral_form(3)
        u = BlobPairing(generator_u(1, 2))
        first, _ = compose_blob(u, blob_e(2), params)
        res, scalar = compose_blob(first.diagram, u, params)
        assert res.diagram == u
        assert res.blob_loops == 1 and res.blob_merges == 0
        assert scalar == params.gamma

    def test_scalar_without_params_is_none(self):
        res, scalar = compose_blob(blob_e(1), blob_e(1))
        assert scalar is None and res.blob_merges == 1

    def test_composition_closed_exhaustively(self):
        # Every product of valid decorated diagrams is again valid (the
        # constructor re-checks exposedness), with consistent blob counts.
        diagrams = enumerate_blob(3)
        for d1, d2 in itertools.product(diagrams, repeat=2):
            res, _ = compose_blob(d1, d2)
            blobs_in = len(d1.blobbed) + len(d2.blobbed)
            blobs_out = len(res.diagram.blobbed)
            # blobs vanish only via merges and blobbed loops
            assert blobs_in - blobs_out == res.blob_merges + res.blob_loops

    def test_pure_tl_through_blob_path(self):
        for d1, d2 in itertools.product(enumerate_tl(3, 3), repeat=2):
            res, _ = compose_blob(BlobPairing(d1), BlobPairing(d2))
            tl = compose_tl(d1, d2)
            assert res.diagram.base == tl.diagram
            assert not res.diagram.blobbed
            assert res.plain_loops == tl.plain_loops
            assert res.blob_loops == res.blob_merges == 0


class TestJson:
    def test_roundtrip_plain(self):
        for d in enumerate_tl(3, 3) + enumerate_tl(2, 4):
            assert diagram_from_json(diagram_to_json(d)) == d

    def test_roundtrip_blob(self):
        for d in enumerate_blob(3):
            obj = diagram_to_json(d)
            assert diagram_from_json(obj) == d
            # canonical bytes are stable
            blob = json.dumps(obj, sort_keys=True)
            assert json.dumps(diagram_to_json(diagram_from_json(obj)),
                              sort_keys=True) == blob

    def test_labels(self):
        obj = diagram_to_json(identity(2))
        assert obj == {"n": 2, "m": 2, "pairs": [["t1", "b1"], ["t2", "b2"]]}
