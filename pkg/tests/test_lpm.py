import itertools

import pytest

from polyshell import (
    LatticePath,
    PathError,
    build_matroid,
    check_base_exchange,
    corollary3_check,
    enumerate_between,
    matroid_h_vector,
    never_above,
    north_steps,
    parse_path,
)
from polyshell.lpm import LatticePathMatroid, all_paths, matroid_f_vector, path_pairs


def P(s):
    return LatticePath(s)


def brute_between(lower, upper):
    """All shape-compatible paths, filtered by prefix heights."""
    def heights(s):
        return list(itertools.accumulate((c == "N" for c in s), initial=0))

    lo, hi = heights(lower.steps), heights(upper.steps)
    m, r = lower.m, lower.r
    out = []
    for north in itertools.combinations(range(m + r), r):
        s = "".join("N" if i in north else "E" for i in range(m + r))
        if all(a <= b <= c for a, b, c in zip(lo, heights(s), hi)):
            out.append(s)
    return sorted(out)


def brute_f_vector(bases, ground):
    """Count subsets of the ground set contained in some basis."""
    bases = [set(b) for b in bases]
    rank = max(len(b) for b in bases)
    return tuple(
        sum(1 for s in itertools.combinations(range(1, ground + 1), i) if any(set(s) <= b for b in bases))
        for i in range(rank + 1)
    )


def test_parse_path():
    assert parse_path("EENN", 2, 2).steps == "EENN"
    assert parse_path("ENEN", 2, 2).steps == "ENEN"
    with pytest.raises(PathError):
        parse_path("ENN", 2, 2)
    with pytest.raises(PathError):
        parse_path("EXNN", 2, 2)


def test_never_above():
    assert never_above(P("EENN"), P("NNEE"))
    assert not never_above(P("NNEE"), P("EENN"))
    assert never_above(P("ENEN"), P("ENEN"))
    with pytest.raises(PathError):
        never_above(P("EN"), P("NNE"))


def test_enumerate_between():
    assert len(list(enumerate_between(P("EENN"), P("NNEE")))) == 6
    assert [p.steps for p in enumerate_between(P("ENEN"), P("ENEN"))] == ["ENEN"]
    assert [p.steps for p in enumerate_between(P("EN"), P("NE"))] == ["EN", "NE"]
    with pytest.raises(PathError):
        list(enumerate_between(P("NE"), P("EN")))


def test_north_steps():
    assert north_steps(P("NNEE")) == {1, 2}
    assert north_steps(P("ENEN")) == {2, 4}
    assert north_steps(P("EENN")) == {3, 4}


def test_build_uniform():
    M = build_matroid(P("EENN"), P("NNEE"))
    assert set(M.bases) == set(itertools.combinations(range(1, 5), 2))
    assert build_matroid(P("EN"), P("EN")).bases == ((2,),)
    assert set(build_matroid(P("EN"), P("NE")).bases) == {(1,), (2,)}


def test_base_exchange():
    assert check_base_exchange(build_matroid(P("EENN"), P("NNEE"))).holds
    bad = check_base_exchange([{1, 2}, {3, 4}])
    assert not bad.holds and bad.axiom == "B2"
    assert bad.witness == ((1, 2), (3, 4), 1)
    assert check_base_exchange([{1, 3}]).holds
    empty = check_base_exchange([])
    assert not empty.holds and empty.axiom == "B1"


def test_h_vectors():
    M = build_matroid(P("EENN"), P("NNEE"))
    assert matroid_f_vector(M) == (1, 4, 6)
    assert matroid_h_vector(M) == (1, 2, 3)
    assert matroid_h_vector(build_matroid(P("ENEN"), P("ENEN"))) == (1, 0, 0)
    U12 = build_matroid(P("EN"), P("NE"))
    assert matroid_f_vector(U12) == (1, 2)
    assert matroid_h_vector(U12) == (1, 1)


@pytest.mark.parametrize("total", [1, 2, 3, 4, 5, 6])
def test_against_brute_force(total):
    for lower, upper in path_pairs(total):
        if len(lower) != total:
            continue
        found = [p.steps for p in enumerate_between(lower, upper)]
        assert found == brute_between(lower, upper)
        M = build_matroid(lower, upper)
        assert len(M.bases) == len(found)
        assert all(len(b) == lower.r for b in M.bases)
        assert matroid_f_vector(M) == brute_f_vector(M.bases, total)
        h = matroid_h_vector(M)
        assert h[0] == 1 and min(h) >= 0


def test_all_paths_and_pairs():
    assert [p.steps for p in all_paths(1, 1)] == ["EN", "NE"]
    assert sum(1 for _ in path_pairs(1)) == 2
    # pairs of Dyck-like comparable paths of length 2: (EE,EE), (NN,NN), EN<=EN, EN<=NE, NE<=NE
    assert sum(1 for _ in path_pairs(2)) - 2 == 5


def test_corollary3_uniform():
    report = corollary3_check(P("EENN"), P("NNEE"))
    assert report.status == "found" and not report.anomaly and report.reverified
    assert report.h_vector == (1, 2, 3)
    assert report.search.witness.maximal == ((0, 2), (1, 1), (2, 0))
    assert report.verification.valid


def test_corollary3_single_path():
    report = corollary3_check(P("ENN"), P("ENN"))
    assert report.h_vector == (1, 0, 0)
    assert report.status == "found"
    assert len(report.shelling) == 1


def test_corollary3_u12():
    report = corollary3_check(P("EN"), P("NE"))
    assert report.h_vector == (1, 1)
    assert report.search.witness.maximal == ((1,),)
    assert report.shelling.to_json() == {"intervals": [{"bottom": [0], "top": [1]}]}


def test_corollary3_json():
    doc = corollary3_check(P("EENN"), P("NNEE")).to_json()
    assert doc["status"] == "found" and doc["anomaly"] is False
    assert doc["h_vector"] == [1, 2, 3] and doc["verification"]["valid"] is True


def test_matroid_json():
    M = build_matroid(P("EN"), P("NE"))
    assert M.to_json() == {"P": "EN", "Q": "NE", "bases": [[2], [1]]}
    assert isinstance(M, LatticePathMatroid)
