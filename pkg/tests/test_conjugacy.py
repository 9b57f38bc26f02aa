import json
from math import gcd

import pytest

from braidforge.conjugacy import (
    CSV_COLUMNS,
    ConjugacyCertificate,
    FamilyParams,
    admissible_families,
    gamma_word,
    sweep_csv,
    sweep_family,
    verify_conjugacy,
    verify_delta_identity,
    write_atomic,
)
from braidforge.errors import ParameterError
from braidforge.garside import equal, normal_form
from braidforge.words import format_word


def test_family_params():
    fam = FamilyParams(2, 5, 2)
    assert (fam.knot1.p, fam.knot1.q, fam.knot1.r, fam.knot1.n) == (12, 5, 2, -1)
    assert (fam.knot2.p, fam.knot2.q, fam.knot2.r, fam.knot2.n) == (13, 5, 3, -1)
    for bad in [(2, 4, 2), (1, 3, 1), (2, 3, 0), (2, 3, 3), (2, 1, 1)]:
        with pytest.raises(ParameterError):
            FamilyParams(*bad)


def test_gamma_examples():
    assert format_word(gamma_word(3, 1)) == "B3: 2"
    assert gamma_word(4, 2).letters == (1, 3)
    assert format_word(gamma_word(2, 1)) == "B2:"
    with pytest.raises(ParameterError):
        gamma_word(3, 3)


@pytest.mark.parametrize("q,m", [(3, 1), (5, 2), (4, 3), (7, 5)])
def test_delta_identity(q, m):
    assert verify_delta_identity(FamilyParams(2, q, m))


def test_certificate_examples():
    c = verify_conjugacy(FamilyParams(2, 3, 1))
    assert c.nf_left == c.nf_right
    assert c.slope == 20 and c.valid
    c = verify_conjugacy(FamilyParams(2, 5, 2))
    assert c.valid and c.slope == 56
    assert c.alexander1 == c.alexander2
    assert c.seifert_data == [2, 2, 3]
    assert equal(c.beta1 * c.gamma, c.gamma * c.beta2)


def test_failed_check_is_named():
    c = verify_conjugacy(FamilyParams(2, 5, 2))
    c.checks["conjugate"] = False
    assert not c.valid
    assert c.failed_checks == ["conjugate"]
    assert c.to_dict()["status"] == "FAILED"


def test_json_round_trip():
    c = verify_conjugacy(FamilyParams(3, 7, 3))
    back = ConjugacyCertificate.from_json(c.to_json())
    assert back == c
    d = json.loads(c.to_json())
    assert d["status"] == "VALID" and d["slope"] == c.slope


def test_nf_strings_are_normal_forms():
    c = verify_conjugacy(FamilyParams(2, 4, 1))
    assert c.nf_left == normal_form(c.beta1 * c.gamma).serialize()


def test_sweep_examples():
    res = sweep_family(2, 2)
    assert [c.family for c in res.certificates] == [FamilyParams(2, 2, 1)]
    res = sweep_family(3, 6)
    pairs = sum(1 for q in range(2, 7) for m in range(1, q) if gcd(q, m) == 1)
    assert len(res.certificates) == 2 * pairs
    assert res.all_valid and res.cursor is None


def test_sweep_staging_and_jobs():
    full = sweep_family(3, 5)
    first = sweep_family(3, 5, limit=4)
    assert first.cursor == 4
    rest = sweep_family(3, 5, start=first.cursor)
    assert rest.cursor is None
    assert sweep_csv(first.certificates + rest.certificates) == sweep_csv(full.certificates)
    par = sweep_family(3, 5, jobs=2)
    assert sweep_csv(par.certificates) == sweep_csv(full.certificates)


def test_sweep_csv_and_atomic_write(tmp_path):
    res = sweep_family(2, 3)
    text = sweep_csv(res.certificates)
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert "\r" not in text
    assert lines[1] == "2,2,1,9,true,5,5,true"
    out = tmp_path / "sub" / "sweep.csv"
    write_atomic(str(out), text)
    assert out.read_bytes() == text.encode("utf-8")
    assert [p.name for p in out.parent.iterdir()] == ["sweep.csv"]


def test_admissible_order():
    fams = list(admissible_families(3, 5))
    keys = [(f.k, f.q, f.m) for f in fams]
    assert keys == sorted(keys)
    with pytest.raises(ParameterError):
        list(admissible_families(1, 5))
