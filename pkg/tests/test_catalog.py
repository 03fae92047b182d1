"""Family catalog: closed forms, lookups, identity reports."""

import pytest

from umbra.catalog import (
    DEFAULT_CHECK_SET,
    Report,
    bell_number,
    check_all,
    family,
    identity_check,
    lah,
    stirling1_unsigned,
    stirling2,
)
from umbra.errors import UnknownFamily
from umbra.fps import x_series

import oracles


def test_family_lookup_and_params():
    spec = family("abel", a="1")
    assert spec.params["a"] == 1
    assert spec.closed_form(3, 1) == 9 and spec.closed_form(3, 2) == -6
    with pytest.raises(UnknownFamily):
        family("nope")
    with pytest.raises(UnknownFamily):
        family("stretch", lam=0)


def test_number_helpers_match_oracles():
    for n in range(10):
        for k in range(n + 1):
            assert stirling1_unsigned(n, k) == oracles.stirling1_unsigned(n, k)
            assert stirling2(n, k) == oracles.stirling2(n, k)
            assert lah(n, k) == oracles.lah(n, k)
    assert lah(4, 2) == 36
    assert [bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_divided_difference_h_zero_is_derivative():
    spec = family("divided_difference", h=0)
    assert spec.delta(8).indicator == x_series(8)
    rep = identity_check("divided_difference", n=6, h=0)
    assert rep.all_passed


def test_abel_a_zero_degenerates_to_monomials():
    spec = family("abel", a=0)
    from umbra.umbral import tri_identity

    assert spec.basic(6).tri == tri_identity(6)
    rep = identity_check("abel", n=6, a=0)
    assert rep.all_passed


def test_catalan_family_delta():
    spec = family("catalan")
    ind = spec.delta(6).indicator
    assert ind[1] == 1 and ind[2] == -1 and all(ind[i] == 0 for i in (0, 3, 4, 5, 6))


def test_closed_forms_match_routes():
    for name, params in DEFAULT_CHECK_SET:
        spec = family(name, **params)
        if spec.closed_form is None:
            continue
        tri = spec.basic(12).tri
        for n in range(13):
            for k in range(n + 1):
                assert tri.entry(n, k) == spec.closed_form(n, k), (name, params, n, k)


def test_degenerate_laguerre_row_values():
    spec = family("degenerate_laguerre", p=2)
    tri = spec.basic(4).tri
    assert list(tri.rows[2]) == [0, 0, 1]  # L_{2,2} = x^2
    assert list(tri.rows[3]) == [0, -6, 0, 1]  # x^3 - 6x
    assert list(tri.rows[4]) == [0, 0, -24, 0, 1]  # x^4 - 24x^2


def test_touchard_identities_pass():
    rep = identity_check("touchard", n=10)
    assert rep.all_passed
    names = {r.identity for r in rep.results}
    assert {"spivey", "dobinski", "touchard_recurrence", "five_routes"} <= names


def test_laguerre_identities_pass():
    rep = identity_check("laguerre", n=8)
    assert rep.all_passed
    assert {"erdelyi", "laguerre_commutation", "laguerre_involution", "lah_connection"} <= {
        r.identity for r in rep.results
    }


def test_report_records_failures():
    rep = Report()
    rep.record("fake", "broken", {}, {"n": 3})
    rep.record("fake", "fine", {}, None)
    assert not rep.all_passed
    assert rep.results[0].status == "fail"
    assert rep.results[0].counterexample == {"n": 3}
    assert rep.results[1].passed


def test_check_all_passes():
    report = check_all(n=8)
    assert report.all_passed
    families_run = {(r.family, tuple(sorted((k, str(v)) for k, v in r.params.items()))) for r in report.results}
    assert len(families_run) == len(DEFAULT_CHECK_SET)


def test_identity_check_seeded_is_deterministic():
    a = identity_check("falling", n=8, seed=5)
    b = identity_check("falling", n=8, seed=5)
    assert [(r.identity, r.status) for r in a.results] == [
        (r.identity, r.status) for r in b.results
    ]
