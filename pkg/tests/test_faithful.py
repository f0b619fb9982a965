import pytest

from tlblob.diagrams import generator_u
from tlblob.rings import BlobParams, LaurentInt, quantum_integer, rank_exact
from tlblob.tensorrep import (
    Rho0Config,
    SparseRepMatrix,
    r_matrix,
    rho0,
    seq_to_index,
)
from tlblob.faithful import (
    certify_mirror,
    certify_rho0,
    rep_word_matrix,
    tl_word_matrix,
    triangularity_report,
    verify_blob_representation,
    verify_mask_independence,
    verify_r_composition,
    verify_tl_faithful,
)
from tlblob.walks import WalkPair, pair_word, tl_basis_word_table, walk_from_string
from tlblob.words import GenWord


class TestTriangularity:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_no_failures(self, n):
        report = triangularity_report(n)
        assert report.ok
        assert not report.failures

    def test_diagonal_anchor_value(self):
        low = walk_from_string("1212")
        word = pair_word(WalkPair(low, low))
        mat = tl_word_matrix(word)
        k = seq_to_index((1, 2, 1, 2))
        assert mat.entries[(k, k)] == LaurentInt({4: 1})

    def test_lower_lattice_block_vanishes(self):
        # The word of the two-descent lowest pair kills every row with
        # fewer than two 2-steps.
        low = walk_from_string("1212")
        mat = tl_word_matrix(pair_word(WalkPair(low, low)))
        from tlblob.tensorrep import index_to_seq

        for (u, v) in mat.entries:
            useq = index_to_seq(u, 4)
            assert sum(1 for s in useq if s == 2) >= 2

    def test_nonwalk_entries_are_informational(self):
        report = triangularity_report(2)
        assert report.ok
        # (21, ...) rows exist but are not walks
        assert report.nonwalk_entries

    def test_jobs_match_serial(self):
        serial = triangularity_report(4, jobs=1)
        parallel = triangularity_report(4, jobs=2)
        assert serial.ok == parallel.ok
        assert len(serial.nonwalk_entries) == len(parallel.nonwalk_entries)


class TestTlFaithful:
    @pytest.mark.parametrize("n,rank", [(2, 2), (3, 5), (4, 14)])
    def test_full_rank(self, n, rank):
        cert = verify_tl_faithful(n)
        assert cert.rank == rank == cert.basis_size
        assert cert.valid
        assert cert.method == "modular-screened-then-exact"

    def test_screen_off_records_exact(self):
        cert = verify_tl_faithful(2, screen=False)
        assert cert.method == "exact" and cert.valid

    def test_certificates_reproducible(self):
        a = verify_tl_faithful(3).dumps()
        b = verify_tl_faithful(3).dumps()
        assert a == b


class TestMaskIndependence:
    def test_all_ones_overlay(self):
        # overlaying the supports with 1s keeps independence
        table = tl_basis_word_table(2)
        one = LaurentInt.one()
        vectors = [{k: one for k in tl_word_matrix(w).entries}
                   for w in table.values()]
        assert rank_exact(vectors) == len(table)

    @pytest.mark.parametrize("n", [2, 3])
    def test_random_overlays(self, n):
        report = verify_mask_independence(n, trials=8, seed=123)
        assert report.ok
        assert report.ranks == [report.basis_size] * 8

    def test_deterministic_given_seed(self):
        a = verify_mask_independence(3, trials=4, seed=5)
        b = verify_mask_independence(3, trials=4, seed=5)
        assert a.ranks == b.ranks


class TestComposition:
    @pytest.mark.parametrize("n", [2, 3])
    def test_identity_sweep(self, n):
        assert verify_r_composition(n) == []

    def test_jobs_match_serial(self):
        assert verify_r_composition(3, jobs=2) == []


class TestMirror:
    def test_rho0_small(self):
        cert = certify_rho0(2, 1)
        assert cert.valid
        assert cert.rank == cert.basis_size == 6
        assert all(c["ok"] for c in cert.mask_checks)

    def test_identity_blob_image_fails_mask(self):
        rep = rho0(Rho0Config(2, 1))
        wrong_e = SparseRepMatrix.identity(4, "cyclo")
        cert = certify_mirror(wrong_e, rep.u_factors, 2)
        assert not cert.valid
        assert any(c["name"] == "e" and not c["ok"] for c in cert.mask_checks)
        assert cert.method == "masks-only"

    def test_missing_factor_rejected(self):
        rep = rho0(Rho0Config(3, 1))
        broken = dict(rep.u_factors)
        del broken[2]
        with pytest.raises(ValueError):
            certify_mirror(rep.e, broken, 3)

    def test_shape_mismatch_rejected(self):
        rep = rho0(Rho0Config(2, 1))
        small = SparseRepMatrix.identity(2, "cyclo")
        with pytest.raises(ValueError):
            certify_mirror(small, rep.u_factors, 2)

    def test_certificate_reproducible(self):
        assert certify_rho0(2, 2).dumps() == certify_rho0(2, 2).dumps()

    def test_unfactored_convenience_mode(self):
        rep = rho0(Rho0Config(2, 1))
        cert = certify_mirror(rep.e, None, 2, unfactored_u=rep.u)
        assert cert.valid and cert.rank == 6
        weaker = [c for c in cert.mask_checks if c.get("weaker")]
        assert weaker and all(c["name"] == "u1_product" for c in weaker)

    def test_exactly_one_u_form_required(self):
        rep = rho0(Rho0Config(2, 1))
        with pytest.raises(ValueError):
            certify_mirror(rep.e, rep.u_factors, 2, unfactored_u=rep.u)
        with pytest.raises(ValueError):
            certify_mirror(rep.e, None, 2)


class TestBlobRepVerification:
    def test_tl_case_no_sign_flip(self):
        images = {i: r_matrix(generator_u(i, 3)) for i in (1, 2)}
        report = verify_blob_representation(
            images, 3, BlobParams.integral_form(1),
            basis=tl_basis_word_table(3))
        assert report.ok
        assert not report.sign_normalized

    @pytest.mark.parametrize("m", [1, 2])
    def test_rho0_passes_after_global_flip(self, m):
        rep = rho0(Rho0Config(2, m))
        params = BlobParams.integral_form(m, cyclo=True)
        report = verify_blob_representation(rep.letter_images(), 2, params)
        assert report.ok
        assert report.sign_normalized
        assert report.empirical_scalars["delta_e"] == -params.delta_e
        assert report.empirical_scalars["gamma"] == -params.gamma
        assert report.expected_scalars["delta_e"] == params.delta_e

    def test_broken_rep_detected(self):
        rep = rho0(Rho0Config(2, 1))
        images = rep.letter_images()
        images["e"] = images["e"].scalar_mul(
            rep.e.entries[next(iter(rep.e.entries))].__class__.from_int(2))
        report = verify_blob_representation(
            images, 2, BlobParams.integral_form(1, cyclo=True))
        assert not report.ok

    def test_word_evaluator_identity(self):
        images = {i: r_matrix(generator_u(i, 3)) for i in (1, 2)}
        out = rep_word_matrix(GenWord((), 3), images, 3, "laurent")
        assert out == SparseRepMatrix.identity(3)


class TestCrossChecks:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_triangularity_agrees_with_rank(self, n):
        tri = triangularity_report(n)
        cert = verify_tl_faithful(n)
        assert tri.ok == (cert.rank == cert.basis_size)
        assert tri.ok and cert.valid

    def test_mirror_rank_agrees_with_mask_implication(self):
        # mask checks passing implies the rank check succeeds
        for n, m in ((1, 1), (2, 1), (2, 2)):
            cert = certify_rho0(n, m)
            assert all(c["ok"] for c in cert.mask_checks)
            assert cert.rank == cert.basis_size

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_folded_masks_and_mirror_rank_both_hold(self, n):
        # hypothesis side: the folded basis words land on distinct diagrams
        # and any nonzero overlay of their supports stays independent;
        # conclusion side: the mirror certificate reaches full rank.
        import random
        from math import comb

        from tlblob.faithful import OVERLAY_MENU
        from tlblob.words import blob_basis_words, eval_word, f_map

        rng = random.Random(99)
        diagrams = set()
        masks = []
        for word in blob_basis_words(n).values():
            tl = eval_word(f_map(word)).tl_diagram
            diagrams.add(tl)
            masks.append(sorted(r_matrix(tl).entries))
        assert len(diagrams) == comb(2 * n, n)
        for _ in range(3):
            vectors = [{pos: rng.choice(OVERLAY_MENU) for pos in m}
                       for m in masks]
            assert rank_exact(vectors) == comb(2 * n, n)
        assert certify_rho0(n, 1).rank == comb(2 * n, n)
