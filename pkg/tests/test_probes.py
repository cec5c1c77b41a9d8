from fsind.probes import identity_membership, singleton_sets_vs_abelian


def test_identity_membership_probe_reports():
    hits = identity_membership(6)
    assert all(h.m % 2 == 1 for h in hits)


def test_singleton_probe_reports():
    hits = singleton_sets_vs_abelian(4)
    assert {str(h.u) for h in hits} == {"(1,2)", "(1,2,3)", "(1,2,3,4)"}
    assert all(h.note in ("abelian", "non-abelian") for h in hits)
