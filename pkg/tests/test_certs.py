"""Certificate parsing, verification, and the shipped data files."""

import json
import random
from pathlib import Path

import pytest

from weylorbit import (
    CertError,
    RootSystemType,
    make_cert,
    mutate_sigma,
    parse_certs,
    verify,
    verify_all,
)
from weylorbit.catalog import (
    a_certificates,
    b_certificates,
    c_certificates,
    f4_certificates,
    g2_certificates,
    g2_pi1_certificates,
    shipped_files,
)
from weylorbit.certs import certs_to_json

CERT_DIR = Path(__file__).resolve().parent.parent / "certs"

G2 = RootSystemType("G", 2)


def test_g2_passes():
    for cert in g2_certificates():
        report = verify(cert)
        assert report.passed
        assert report.cond2_match in (None, True)


def test_g2_wrong_sigma_fails_cond1():
    cert = make_cert(G2, [2], (1, 0), [2], label="wrong generator")
    report = verify(cert)
    assert not report.cond1
    assert not report.passed


def test_cond2_witness_values():
    cert = make_cert(G2, [2], (3, 1), [2, 1], expected_cond2=[(1, 0)])
    report = verify(cert)
    assert report.cond2_witnesses == ((1, 0),)
    assert report.cond2_match is True
    mismatch = make_cert(G2, [2], (3, 1), [2, 1], expected_cond2=[(0, 1)])
    assert verify(mismatch).cond2_match is False


def test_parse_empty_document():
    assert parse_certs("[]") == []


def test_parse_rejects_bad_gamma():
    doc = json.dumps([{"type": "G2", "pi": [2], "gamma": [5, 5], "sigma": [1], "label": "x"}])
    with pytest.raises(CertError, match="not a positive root"):
        parse_certs(doc)


def test_parse_rejects_unknown_type_and_indices():
    with pytest.raises(CertError):
        parse_certs(json.dumps([{"type": "Z9", "pi": [], "gamma": [1], "sigma": [1]}]))
    with pytest.raises(CertError, match="out of range"):
        parse_certs(json.dumps([{"type": "G2", "pi": [2], "gamma": [1, 0], "sigma": [7]}]))
    with pytest.raises(CertError, match="nonempty"):
        parse_certs(json.dumps([{"type": "G2", "pi": [2], "gamma": [1, 0], "sigma": []}]))
    with pytest.raises(CertError, match="JSON"):
        parse_certs("{nope")


def test_verify_rejects_inadmissible_pi():
    cert = make_cert(RootSystemType("A", 3), [1], (0, 1, 0), [2], label="bad pi")
    with pytest.raises(CertError, match="admissible"):
        verify(cert)


def test_verify_rejects_gamma_inside_pi_subsystem():
    cert = make_cert(RootSystemType("G", 2), [2], (0, 1), [2], label="inside pi")
    with pytest.raises(CertError, match="pi subsystem"):
        verify(cert)


def test_verify_all_empty():
    summary = verify_all([])
    assert (summary.passed, summary.failed, summary.reports) == (0, 0, [])
    assert summary.ok


def test_verify_all_counts_and_order():
    certs = g2_certificates() + [make_cert(G2, [2], (1, 0), [2], label="bad")]
    summary = verify_all(certs)
    assert (summary.passed, summary.failed) == (2, 1)
    assert not summary.ok
    # permuting the input permutes the reports identically
    flipped = verify_all(list(reversed(certs)))
    assert [c.label for c, _ in flipped.reports] == [c.label for c, _ in reversed(summary.reports)]
    assert [r.as_dict() for _, r in flipped.reports] == [
        r.as_dict() for _, r in reversed(summary.reports)
    ]


def test_round_trip_through_json():
    certs = g2_certificates() + f4_certificates()
    again = parse_certs(certs_to_json(certs))
    assert again == certs


def test_catalog_families_all_pass():
    # construction already verifies; spot-check via verify_all as well
    for certs in (g2_certificates(), g2_pi1_certificates(), f4_certificates(),
                  a_certificates(4), b_certificates(4), c_certificates(4)):
        assert verify_all(certs).ok


def test_shipped_files_match_catalog():
    for name, certs in shipped_files().items():
        on_disk = parse_certs((CERT_DIR / name).read_text())
        assert on_disk == certs, f"{name} is stale; regenerate with python -m weylorbit.catalog"


def test_shipped_g2_file_has_two_entries():
    certs = parse_certs((CERT_DIR / "g2.certs.json").read_text())
    assert len(certs) == 2
    assert verify_all(certs).ok


def test_mutation_mostly_detected():
    rng = random.Random(20240901)
    certs = g2_certificates() + g2_pi1_certificates() + f4_certificates() + b_certificates(3)
    detected = 0
    for cert in certs:
        mutant = mutate_sigma(cert, rng)
        assert mutant.sigma_word != cert.sigma_word
        if not verify(mutant).passed:
            detected += 1
    assert detected >= 0.95 * len(certs)


def test_passing_cert_gains_length_after_twist():
    # the condition-3 image being positive forces the twisted element longer
    from weylorbit import build, from_word, inverse, multiply, simple_reflection
    from weylorbit.spherical import candidate_element

    for cert in f4_certificates():
        rs = build(cert.rstype)
        sigma = from_word(rs, cert.sigma_word)
        u = multiply(multiply(sigma, candidate_element(rs, cert.pi)), inverse(sigma))
        twisted = multiply(u, simple_reflection(rs, cert.sigma_word[0]))
        assert twisted.length == u.length + 1
