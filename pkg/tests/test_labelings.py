import json

import numpy as np
import pytest

from irrstrength import (
    EdgeLabeling,
    FormatError,
    Graph,
    certificate_from_json,
    certificate_to_dot,
    certificate_to_json,
    make_certificate,
    make_family,
    make_triangular_book,
    verify_irregular,
    verify_modular,
    vertex_weights,
)
from irrstrength.books import irregular_labeling

C3 = make_family("cycle", 3)


class TestEdgeLabeling:
    def test_k_is_max_label(self):
        assert EdgeLabeling([1, 4, 2]).k == 4

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError, match="positive"):
            EdgeLabeling([1, 0, 2])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            EdgeLabeling([])

    def test_rejects_oversized_label(self):
        with pytest.raises(ValueError, match="limit"):
            EdgeLabeling([1, 10**6 + 1])

    def test_labels_read_only(self):
        f = EdgeLabeling([1, 2])
        with pytest.raises(ValueError):
            f.labels[0] = 3


class TestVertexWeights:
    def test_triangle_one_two_three(self):
        prof = vertex_weights(C3, EdgeLabeling([1, 2, 3]))
        assert prof.weights.tolist() == [3, 4, 5]
        assert prof.residues.tolist() == [0, 1, 2]

    def test_all_ones_gives_degree_sequence(self):
        for g in (make_triangular_book(4), make_family("star", 5), make_family("path", 6)):
            prof = vertex_weights(g, EdgeLabeling([1] * g.size))
            assert np.array_equal(prof.weights, g.degrees())

    def test_book_two_closed_form(self):
        g = make_triangular_book(2)
        prof = vertex_weights(g, irregular_labeling(2))
        assert prof.weights.tolist() == [4, 5, 2, 3]

    def test_rejects_misaligned_labeling(self):
        with pytest.raises(ValueError, match="covers"):
            vertex_weights(C3, EdgeLabeling([1, 2]))

    def test_matches_incidence_sum(self):
        g = make_triangular_book(3)
        f = EdgeLabeling([5, 1, 4, 2, 3, 1, 2])
        prof = vertex_weights(g, f)
        for v in range(g.order):
            expected = sum(int(f.labels[e]) for e in g.incidence()[v])
            assert int(prof.weights[v]) == expected


class TestVerifyIrregular:
    def test_triangle_ok(self):
        assert verify_irregular(C3, EdgeLabeling([1, 2, 3])).ok

    def test_constant_labels_collide(self):
        verdict = verify_irregular(C3, EdgeLabeling([1, 1, 1]))
        assert not verdict.ok
        assert verdict.kind == "duplicate-weight"
        assert verdict.pair == (0, 1)

    def test_book_five_modular_labeling_is_irregular(self):
        g = make_triangular_book(5)
        f = EdgeLabeling([1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4])
        assert verify_irregular(g, f).ok

    def test_reports_first_pair_in_vertex_order(self):
        # path 0-1-2-3 with labels 2,1,2: weights 2,3,3,2 -> (0,3) vs (1,2)
        g = make_family("path", 4)
        verdict = verify_irregular(g, EdgeLabeling([2, 1, 2]))
        assert verdict.pair == (1, 2)


class TestVerifyModular:
    def test_book_five_case(self):
        g = make_triangular_book(5)
        f = EdgeLabeling([1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4])
        verdict = verify_modular(g, f)
        assert verdict.ok
        prof = vertex_weights(g, f)
        assert prof.weights[0] == 8 and prof.residues[0] == 1
        assert prof.weights[1] == 14 and prof.residues[1] == 0
        assert prof.weights[2:].tolist() == [2, 3, 4, 5, 6]

    def test_triangle(self):
        assert verify_modular(C3, EdgeLabeling([1, 2, 3])).ok

    def test_book_two_closed_form_is_modular(self):
        g = make_triangular_book(2)
        assert verify_modular(g, irregular_labeling(2)).ok  # weights 4,5,2,3 mod 4

    def test_collision_reported(self):
        verdict = verify_modular(C3, EdgeLabeling([1, 1, 1]))
        assert not verdict.ok
        assert verdict.kind == "residue-collision"
        assert verdict.pair == (0, 1)

    def test_rejects_tiny_order(self):
        g = make_family("path", 2)
        with pytest.raises(ValueError, match="order >= 3"):
            verify_modular(g, EdgeLabeling([1]))

    def test_modular_ok_implies_irregular_ok(self):
        g = make_triangular_book(5)
        f = EdgeLabeling([1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4])
        assert verify_modular(g, f).ok and verify_irregular(g, f).ok


class TestCertificateJson:
    def test_fixed_key_order(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        text = certificate_to_json(cert)
        assert text == (
            '{"order":3,"edges":[[0,1],[0,2],[1,2]],"labels":[1,2,3],'
            '"weights":[3,4,5],"residues":[0,1,2],"k":3,"mode":"modular"}'
        )

    def test_round_trip_byte_identical(self):
        g = make_triangular_book(7)
        cert = make_certificate(g, EdgeLabeling(list(range(1, g.size + 1))), "irregular")
        text = certificate_to_json(cert)
        again = certificate_to_json(certificate_from_json(text))
        assert text == again

    def test_round_trip_value_equality(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        assert certificate_from_json(certificate_to_json(cert)) == cert

    def test_rejects_tampered_weights(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        doc = json.loads(certificate_to_json(cert))
        doc["weights"][0] += 1
        with pytest.raises(FormatError, match="weights"):
            certificate_from_json(json.dumps(doc))

    def test_rejects_tampered_residues(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        doc = json.loads(certificate_to_json(cert))
        doc["residues"] = [1, 0, 2]
        with pytest.raises(FormatError, match="residues"):
            certificate_from_json(json.dumps(doc))

    def test_rejects_wrong_k(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        doc = json.loads(certificate_to_json(cert))
        doc["k"] = 5
        with pytest.raises(FormatError, match="k="):
            certificate_from_json(json.dumps(doc))

    def test_rejects_missing_field(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        doc = json.loads(certificate_to_json(cert))
        del doc["labels"]
        with pytest.raises(FormatError, match="missing"):
            certificate_from_json(json.dumps(doc))

    def test_rejects_bad_mode(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        doc = json.loads(certificate_to_json(cert))
        doc["mode"] = "total"
        with pytest.raises(FormatError, match="mode"):
            certificate_from_json(json.dumps(doc))

    def test_rejects_junk(self):
        with pytest.raises(FormatError):
            certificate_from_json("{not json")
        with pytest.raises(FormatError):
            certificate_from_json('["a","list"]')

    def test_rejects_bad_mode_at_creation(self):
        with pytest.raises(ValueError):
            make_certificate(C3, EdgeLabeling([1, 2, 3]), "total")


class TestDotExport:
    def test_triangle_dot(self):
        cert = make_certificate(C3, EdgeLabeling([1, 2, 3]), "modular")
        assert certificate_to_dot(cert) == (
            "graph G {\n"
            '  0 [label="3"];\n'
            '  1 [label="4"];\n'
            '  2 [label="5"];\n'
            '  0 -- 1 [label="1"];\n'
            '  0 -- 2 [label="2"];\n'
            '  1 -- 2 [label="3"];\n'
            "}\n"
        )
